#include "pathalg/experiment.hpp"

#include <algorithm>
#include <sstream>

namespace pathalg {

ExperimentSpec ExperimentSpec::from_json(const Json& j) {
  ExperimentSpec s;
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("count")) s.count = j["count"].get<int>();
  if (j.contains("vertices")) s.vertices = j["vertices"].get<int>();
  if (j.contains("arrows")) s.arrows = j["arrows"].get<int>();
  if (j.contains("profile")) {
    const Json& p = j["profile"];
    if (!p.contains("degrees") || !p.contains("counts"))
      fail(ErrorCode::kParse, "profile needs degrees and counts");
    for (const auto& d : p["degrees"]) s.profile_degrees.push_back(d.get<int>());
    for (const auto& c : p["counts"]) s.profile_counts.push_back(c.get<int>());
  }
  if (j.contains("field")) s.field = j["field"].get<std::string>();
  if (j.contains("max_degree")) s.max_degree = j["max_degree"].get<int>();
  if (j.contains("max_n")) s.max_n = j["max_n"].get<int>();
  if (s.profile_degrees.size() != s.profile_counts.size() || s.profile_degrees.empty())
    fail(ErrorCode::kParse, "profile degrees/counts mismatch");
  if (s.count < 0 || s.vertices < 1 || s.arrows < 1)
    fail(ErrorCode::kParse, "bad experiment spec");
  return s;
}

Json ExperimentSpec::to_json() const {
  Json j;
  j["seed"] = seed;
  j["count"] = count;
  j["vertices"] = vertices;
  j["arrows"] = arrows;
  Json p;
  p["degrees"] = profile_degrees;
  p["counts"] = profile_counts;
  j["profile"] = std::move(p);
  j["field"] = field;
  j["max_degree"] = max_degree;
  j["max_n"] = max_n;
  return j;
}

AlgebraInput RandomInstance::as_input(const Field& f) const {
  AlgebraInput input;
  input.quiver = quiver;
  input.field = f;
  for (const Path& t : tips)
    input.relations.push_back(AlgebraElement::term(*quiver, f, t, Scalar::one(f)));
  return input;
}

std::shared_ptr<const Quiver> random_quiver(Lcg& rng, int vertices, int arrows) {
  std::vector<std::string> vs;
  for (int v = 0; v < vertices; ++v) vs.push_back("v" + std::to_string(v));
  std::vector<std::tuple<std::string, std::string, std::string>> as;
  for (int a = 0; a < arrows; ++a) {
    int src = static_cast<int>(rng.bounded(vertices));
    int tgt = static_cast<int>(rng.bounded(vertices));
    as.emplace_back("a" + std::to_string(a), vs[src], vs[tgt]);
  }
  return std::make_shared<Quiver>(std::move(vs), std::move(as));
}

namespace {

std::optional<Path> random_walk(Lcg& rng, const Quiver& q, int length) {
  // Start from a random arrow, extend by random composable arrows.
  if (q.num_arrows() == 0) return std::nullopt;
  std::vector<int> arrows{static_cast<int>(rng.bounded(q.num_arrows()))};
  for (int i = 1; i < length; ++i) {
    std::vector<int> options;
    int at = q.arrow(arrows.back()).target;
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrow(a).source == at) options.push_back(a);
    if (options.empty()) return std::nullopt;
    arrows.push_back(options[rng.bounded(options.size())]);
  }
  return Path::of_arrows(q, std::move(arrows));
}

bool antichain_ok(const std::vector<Path>& paths) {
  for (const auto& p : paths) {
    for (const auto& r : paths) {
      if (&p == &r) continue;
      if (p == r) return false;
      if (p.length() <= r.length() && is_subpath(p, r)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<RandomInstance> random_monomial_instance(
    Lcg& rng, int vertices, int arrows, const std::vector<int>& degrees,
    const std::vector<int>& counts, int attempts) {
  for (int attempt = 0; attempt < attempts; ++attempt) {
    auto quiver = random_quiver(rng, vertices, arrows);
    std::vector<Path> tips;
    bool ok = true;
    for (size_t i = 0; i < degrees.size() && ok; ++i) {
      for (int c = 0; c < counts[i] && ok; ++c) {
        bool placed = false;
        for (int tries = 0; tries < 40 && !placed; ++tries) {
          auto p = random_walk(rng, *quiver, degrees[i]);
          if (!p) break;
          auto cand = tips;
          cand.push_back(*p);
          if (antichain_ok(cand)) {
            tips = std::move(cand);
            placed = true;
          }
        }
        ok = placed;
      }
    }
    if (!ok) continue;
    std::sort(tips.begin(), tips.end());
    return RandomInstance{std::move(quiver), std::move(tips)};
  }
  return std::nullopt;
}

AlgebraInput perturb_same_tips(Lcg& rng, const RandomInstance& inst, const Field& f,
                               int max_degree, int attempts) {
  const Quiver& q = *inst.quiver;
  TipSet tips = inst.tip_set();
  AdmissibleOrder order(q, AdmissibleOrder::Kind::kDeglex);
  NormalBasis basis(q, tips, max_degree);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<AlgebraElement> rels;
    bool perturbed = false;
    for (const Path& t : inst.tips) {
      AlgebraElement rel = AlgebraElement::term(q, f, t, Scalar::one(f));
      // Candidate tails: parallel normal words of the same degree that
      // are order-smaller than the tip.
      std::vector<Path> tails;
      for (const Path& u : basis.words(t.length(), t.source(), t.target()))
        if (order.less(u, t)) tails.push_back(u);
      if (!tails.empty() && rng.bounded(2) == 0) {
        const Path& u = tails[rng.bounded(tails.size())];
        long long c = 1 + static_cast<long long>(rng.bounded(3));
        if (rng.bounded(2) == 0) c = -c;
        rel.add_term(u, Scalar::from_int(f, c));
        perturbed = true;
      }
      rels.push_back(std::move(rel));
    }
    if (!perturbed) continue;
    GroebnerBasis gb = buchberger(q, f, rels, order, max_degree);
    if (!gb.complete()) continue;
    TipSet new_tips = tip_ideal(gb);
    if (new_tips.paths() == tips.paths()) {
      AlgebraInput input;
      input.quiver = inst.quiver;
      input.field = f;
      input.relations = std::move(rels);
      return input;
    }
  }
  return inst.as_input(f);
}

ExperimentOutput run_experiment(const ExperimentSpec& spec) {
  ExperimentOutput out;
  std::ostringstream csv;
  csv << "index,vertices,arrows,profile,d,verdict,route_a,route_b,routes_agree,"
         "ap3_agree,witness_count,stops_at\n";

  Field field = Field::parse(spec.field);
  std::string profile_str;
  for (size_t i = 0; i < spec.profile_degrees.size(); ++i) {
    if (i) profile_str += '|';
    profile_str += std::to_string(spec.profile_degrees[i]) + "x" +
                   std::to_string(spec.profile_counts[i]);
  }
  bool two_degree = spec.profile_degrees.size() == 2;
  int d = spec.profile_degrees.back();

  Lcg rng(spec.seed);
  for (int idx = 0; idx < spec.count; ++idx) {
    auto inst = random_monomial_instance(rng, spec.vertices, spec.arrows,
                                         spec.profile_degrees, spec.profile_counts);
    if (!inst)
      fail(ErrorCode::kInvalidArgument,
           "cannot realize the requested profile on random quivers");
    TipSet tips = inst->tip_set();
    ChainTable chains = build_chains(tips, spec.max_n);
    BettiTable table = degree_table(chains);

    bool route_a, route_b;
    int witness_count = 0;
    if (two_degree) {
      TwoDCheck check = is_2d_determined_monomial(tips, d);
      route_a = check.value == Verdict::kYes;
      witness_count = static_cast<int>(check.witnesses.size());
      FCheck weak = check_f_determined(table, DegreeFunction::delta(d),
                                       FMode::kWeak, spec.max_n);
      route_b = weak.value;
    } else {
      DKoszulCheck check = is_d_koszul_monomial(tips, d);
      route_a = check.value;
      witness_count = static_cast<int>(check.overlap_witnesses.size());
      route_b = check.window_witnesses.empty();
    }
    // The level-3 criterion: all AP(3) words of length ≤ d+1 for the
    // two-degree shape, exactly d+1 for the single-degree shape.
    bool ap3 = true;
    if (chains.num_levels() > 3) {
      for (const auto& c : chains.level(3)) {
        if (two_degree ? c.word.length() > d + 1 : c.word.length() != d + 1)
          ap3 = false;
      }
    }
    std::optional<int> stops;
    for (int n = 2; n < chains.num_levels(); ++n) {
      if (chains.level(n).empty()) {
        stops = n;
        break;
      }
    }

    csv << idx << ',' << spec.vertices << ',' << spec.arrows << ',' << profile_str
        << ',' << d << ',' << (route_a ? "yes" : "no") << ','
        << (route_a ? "yes" : "no") << ',' << (route_b ? "yes" : "no") << ','
        << (route_a == route_b ? "true" : "false") << ','
        << (route_a == ap3 ? "true" : "false") << ',' << witness_count << ','
        << (stops ? std::to_string(*stops) : "none") << '\n';

    AlgebraInput input = inst->as_input(field);
    input.name = "instance-" + std::to_string(idx);
    ClassifyBounds bounds;
    bounds.max_degree = spec.max_degree;
    bounds.max_n = spec.max_n;
    KoszulReport report = classify(input, bounds);
    out.reports.push_back(report_to_json(report));
  }
  out.csv = csv.str();
  return out;
}

}  // namespace pathalg
