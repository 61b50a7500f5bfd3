#include "pathalg/commands.hpp"

namespace pathalg {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParse:
      return 2;
    case ErrorCode::kCompositionMismatch:
    case ErrorCode::kZeroElement:
    case ErrorCode::kInhomogeneousInput:
    case ErrorCode::kNotAntichain:
    case ErrorCode::kMixedDegreeInput:
    case ErrorCode::kWrongDegreeProfile:
    case ErrorCode::kTruncatedRow:
    case ErrorCode::kIncompleteBasis:
    case ErrorCode::kInvalidArgument:
      return 3;
    case ErrorCode::kInternal:
      return 1;
  }
  return 1;
}

Json cmd_gb(const AlgebraInput& input, int max_degree) {
  GroebnerBasis gb = buchberger(*input.quiver, input.field, input.relations,
                                input.order(), max_degree);
  return gb_to_json(gb);
}

Json cmd_mon(const AlgebraInput& input, int max_degree) {
  GroebnerBasis gb = buchberger(*input.quiver, input.field, input.relations,
                                input.order(), max_degree);
  TipSet tips = tip_ideal(gb);
  Json j;
  j["quiver"] = quiver_to_json(*input.quiver);
  j["field"] = input.field.str();
  j["complete"] = gb.complete();
  j["valid_to_degree"] = gb.valid_to_degree();
  j["tips"] = Json::array();
  for (const Path& t : tips.paths()) j["tips"].push_back(path_to_json(t));
  j["degrees"] = tips.degrees();
  return j;
}

namespace {

std::pair<GroebnerBasis, TipSet> basis_and_tips(const AlgebraInput& input,
                                                int max_degree) {
  GroebnerBasis gb = buchberger(*input.quiver, input.field, input.relations,
                                input.order(), max_degree);
  TipSet tips = tip_ideal(gb);
  return {std::move(gb), std::move(tips)};
}

}  // namespace

Json cmd_ap(const AlgebraInput& input, int max_degree, int max_n) {
  auto [gb, tips] = basis_and_tips(input, max_degree);
  ChainTable chains = build_chains(tips, max_n);
  return chains_to_json(chains);
}

Json cmd_resolve(const AlgebraInput& input, int max_degree, int max_n) {
  auto [gb, tips] = basis_and_tips(input, max_degree);
  ChainTable chains = build_chains(tips, max_n);
  return betti_to_json(degree_table(chains), *input.quiver);
}

Json cmd_oracle(const AlgebraInput& input, int max_degree, int max_n) {
  GroebnerBasis gb = buchberger(*input.quiver, input.field, input.relations,
                                input.order(), max_degree);
  BettiTable table = oracle_resolution(*input.quiver, gb, max_n, max_degree);
  return betti_to_json(table, *input.quiver);
}

KoszulReport cmd_report(const AlgebraInput& input, const ClassifyBounds& bounds) {
  return classify(input, bounds);
}

bool report_inconclusive(const KoszulReport& report) {
  if (report.d_koszul.value == Verdict::kInconclusive) return true;
  if (report.two_d_determined.value == Verdict::kInconclusive) return true;
  if (report.ext_generated_012.value == Verdict::kInconclusive) return true;
  for (const auto& fv : report.f_determined) {
    if (fv.monomial_side.value == Verdict::kInconclusive) return true;
    if (fv.algebra_side.value == Verdict::kInconclusive) return true;
  }
  return false;
}

}  // namespace pathalg
