// Decision procedures for resolution degree patterns: the delta pattern,
// single-degree and two-degree monomial criteria, bounded degree-function
// checks, Ext-generation factorization, and the aggregated classifier.
// Finite criteria yield exact verdicts; anything quantified over all
// homological degrees is reported only up to the stated bound.
#ifndef PATHALG_KOSZUL_HPP
#define PATHALG_KOSZUL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/resolution.hpp"

namespace pathalg {

// Degree pattern of the d-Koszul shape: nd/2 for even n, (n−1)d/2 + 1
// for odd n.
int delta_degree(int n, int d);

struct DegreeFunction {
  enum class Kind { kDelta, kTable };
  Kind kind = Kind::kDelta;
  int d = 2;
  std::vector<int> table;

  int operator()(int n) const;
  // Largest n the function is defined for; -1 means unbounded.
  int domain_cap() const;
  std::string str() const;
  static DegreeFunction delta(int d);
  static DegreeFunction explicit_table(std::vector<int> values);
  // "delta:<d>" or "table:v0,v1,..."
  static DegreeFunction parse(const std::string& text);
};

enum class Verdict { kYes, kNo, kInconclusive, kOutOfScope };
std::string verdict_name(Verdict v);

// Both finite routes for "the monomial algebra on a single-degree
// anti-chain has the delta-pattern resolution": (a) every maximal overlap
// word has length d+1; (b) every window of length d inside every overlap
// word lies in rho. The routes must agree; disagreement is an internal
// error.
struct DKoszulCheck {
  bool value = false;
  std::vector<Path> overlap_witnesses;  // maximal overlaps of length ≠ d+1
  std::vector<Path> window_witnesses;   // overlap words with a window outside rho
};
DKoszulCheck is_d_koszul_monomial(const TipSet& rho, int d);

enum class FMode { kStrict, kWeak };

struct FCheck {
  bool value = false;
  int n_checked = -1;  // verdict holds for rows 0..n_checked
  std::vector<std::pair<int, int>> witnesses;  // (n, internal degree)
};
// Strict: every row-n degree equals F(n). Weak: lies in [n, F(n)].
// Throws on truncated rows in range.
FCheck check_f_determined(const BettiTable& table, const DegreeFunction& f,
                          FMode mode, int max_n);

struct TwoDCheck {
  Verdict value = Verdict::kOutOfScope;
  std::vector<Path> witnesses;
};
// For monomial relations in degrees {2, d}, d ≥ 3: decided for all n by
// the d-stratum's single-degree criterion.
TwoDCheck is_2d_determined_monomial(const TipSet& rho, int d);

struct ExtGenCheck {
  bool value = false;
  int n_max = 0;
  std::vector<std::pair<int, int>> witnesses;  // (level, chain index)
};
// Every chain at level ≥ 3 extends by a single arrow or by a full rho
// element; this is the finite criterion for the Ext-algebra of a
// monomial quotient to be generated in degrees 0, 1, 2.
ExtGenCheck check_ext_generation_012(const ChainTable& table);

// An algebra presentation; owns its quiver so paths stay valid.
struct AlgebraInput {
  std::shared_ptr<const Quiver> quiver;
  Field field = Field::rationals();
  AdmissibleOrder::Kind order_kind = AdmissibleOrder::Kind::kDeglex;
  std::vector<std::string> order_priorities;
  std::vector<AlgebraElement> relations;
  std::string name;

  AdmissibleOrder order() const {
    return AdmissibleOrder(*quiver, order_kind, order_priorities);
  }
};

struct ClassifyBounds {
  int max_degree = 10;
  int max_n = 6;
  std::optional<int> override_d;
  std::vector<std::pair<DegreeFunction, FMode>> f_checks;
};

struct VerdictInfo {
  Verdict value = Verdict::kInconclusive;
  bool exact = false;
  int bound = -1;  // meaningful when !exact
  std::vector<std::string> rules;
  std::vector<std::string> witnesses;
  std::string note;
};

struct FVerdict {
  std::string function;
  std::string mode;
  VerdictInfo monomial_side;  // associated monomial algebra, exact table
  VerdictInfo algebra_side;   // transferred / oracle-backed statement
};

struct KoszulReport {
  // input summary
  std::string name;
  std::string field;
  std::string order_kind;
  std::vector<std::string> order_priorities;
  int num_vertices = 0;
  int num_arrows = 0;
  int num_relations = 0;
  // bounds
  int max_degree = 0;
  int max_n = 0;
  // Gröbner summary
  int gb_size = 0;
  std::vector<int> gb_degrees;
  bool gb_complete = false;
  int gb_valid_to = 0;
  bool monomial = false;
  // shape
  std::string shape;  // none | single | two_degree | mixed
  std::optional<int> d;
  // verdicts
  VerdictInfo d_koszul;
  VerdictInfo two_d_determined;
  VerdictInfo ext_generated_012;
  std::vector<FVerdict> f_determined;
  // AGS-minimality hypothesis status (bounded test)
  bool ags_tested = false;
  bool ags_holds = false;
  int ags_n = 0;
  int ags_degree_cap = 0;
  std::optional<int> resolution_stops_at;
  // wall-clock; excluded from golden comparisons
  long long timing_ms = 0;
};

KoszulReport classify(const AlgebraInput& input, const ClassifyBounds& bounds);

std::string render_report_text(const KoszulReport& report);

}  // namespace pathalg

#endif
