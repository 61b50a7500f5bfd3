// Command-line front end: gb | mon | ap | resolve | oracle | report |
// experiment over JSON algebra presentations.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pathalg/commands.hpp"

namespace {

using pathalg::AlgebraInput;
using pathalg::Json;

struct CommonOpts {
  std::string input;
  std::string out;
  std::string format = "json";
  std::string order;
  std::string field;
  int max_degree = 10;
  int max_n = 6;
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_n) {
  cmd->add_option("--input", opts.input, "input JSON file")->required();
  cmd->add_option("--out", opts.out, "output path (default stdout)");
  cmd->add_option("--format", opts.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--order", opts.order, "order kind override (deglex|degrevlex)");
  cmd->add_option("--field", opts.field, "field override (rational|fp:P)");
  cmd->add_option("--max-degree", opts.max_degree, "degree bound");
  if (needs_n) cmd->add_option("--max-n", opts.max_n, "homological level bound");
  cmd->add_flag("--strict", opts.strict, "exit 4 on inconclusive verdicts");
}

AlgebraInput load(const CommonOpts& opts) {
  AlgebraInput input = pathalg::load_input_file(opts.input);
  if (!opts.order.empty())
    input.order_kind = pathalg::AdmissibleOrder::parse_kind(opts.order);
  if (!opts.field.empty()) {
    pathalg::Field f = pathalg::Field::parse(opts.field);
    if (f != input.field && !input.relations.empty())
      pathalg::fail(pathalg::ErrorCode::kParse,
                    "field override differs from the input file; re-encode the "
                    "relations instead");
    input.field = f;
  }
  return input;
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opts.out);
  if (!out)
    pathalg::fail(pathalg::ErrorCode::kInvalidArgument,
                  "cannot write: " + opts.out);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path-algebra Gröbner bases and resolution degree classifiers"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string check_f;
  std::string out_dir;

  CLI::App* gb = app.add_subcommand("gb", "reduced Gröbner basis up to a degree");
  add_common(gb, opts, false);
  CLI::App* mon = app.add_subcommand("mon", "associated monomial data (tips)");
  add_common(mon, opts, false);
  CLI::App* ap = app.add_subcommand("ap", "admissible-path chain table");
  add_common(ap, opts, true);
  CLI::App* resolve =
      app.add_subcommand("resolve", "resolution degree table, chain route");
  add_common(resolve, opts, true);
  CLI::App* oracle =
      app.add_subcommand("oracle", "resolution degree table, linear-algebra route");
  add_common(oracle, opts, true);
  CLI::App* report = app.add_subcommand("report", "full classification report");
  add_common(report, opts, true);
  report->add_option("--check-F", check_f,
                     "degree function to test (delta:<d> or table:v0,v1,...)");
  CLI::App* experiment =
      app.add_subcommand("experiment", "seeded random-instance sweep");
  experiment->add_option("--input", opts.input, "experiment spec JSON")->required();
  experiment->add_option("--out", opts.out, "CSV output path (default stdout)");
  experiment->add_option("--out-dir", out_dir, "directory for per-instance reports");
  std::uint64_t seed_override = 0;
  bool seed_set = false;
  experiment->add_option("--seed", seed_override, "seed override")
      ->each([&](const std::string&) { seed_set = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (gb->parsed()) {
      emit(opts, pathalg::cmd_gb(load(opts), opts.max_degree).dump(2));
    } else if (mon->parsed()) {
      emit(opts, pathalg::cmd_mon(load(opts), opts.max_degree).dump(2));
    } else if (ap->parsed()) {
      emit(opts, pathalg::cmd_ap(load(opts), opts.max_degree, opts.max_n).dump(2));
    } else if (resolve->parsed()) {
      emit(opts,
           pathalg::cmd_resolve(load(opts), opts.max_degree, opts.max_n).dump(2));
    } else if (oracle->parsed()) {
      emit(opts,
           pathalg::cmd_oracle(load(opts), opts.max_degree, opts.max_n).dump(2));
    } else if (report->parsed()) {
      pathalg::ClassifyBounds bounds;
      bounds.max_degree = opts.max_degree;
      bounds.max_n = opts.max_n;
      if (!check_f.empty()) {
        pathalg::DegreeFunction f = pathalg::DegreeFunction::parse(check_f);
        bounds.f_checks.emplace_back(f, pathalg::FMode::kStrict);
        bounds.f_checks.emplace_back(f, pathalg::FMode::kWeak);
      }
      pathalg::KoszulReport rep = pathalg::cmd_report(load(opts), bounds);
      if (opts.format == "text")
        emit(opts, pathalg::render_report_text(rep));
      else
        emit(opts, pathalg::report_to_json(rep).dump(2));
      if (opts.strict && pathalg::report_inconclusive(rep)) return 4;
    } else if (experiment->parsed()) {
      std::ifstream in(opts.input);
      if (!in)
        pathalg::fail(pathalg::ErrorCode::kParse,
                      "cannot open spec: " + opts.input);
      Json j;
      try {
        in >> j;
      } catch (const std::exception& e) {
        pathalg::fail(pathalg::ErrorCode::kParse, std::string("bad JSON: ") + e.what());
      }
      pathalg::ExperimentSpec spec = pathalg::ExperimentSpec::from_json(j);
      if (seed_set) spec.seed = seed_override;
      pathalg::ExperimentOutput out = pathalg::run_experiment(spec);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (size_t i = 0; i < out.reports.size(); ++i) {
          std::ofstream f(out_dir + "/instance-" + std::to_string(i) + ".json");
          f << out.reports[i].dump(2) << '\n';
        }
      }
      CommonOpts csv_opts;
      csv_opts.out = opts.out;
      emit(csv_opts, out.csv);
    }
  } catch (const pathalg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pathalg::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
