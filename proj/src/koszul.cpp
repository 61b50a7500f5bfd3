#include "pathalg/koszul.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace pathalg {

int delta_degree(int n, int d) {
  if (n < 0 || d < 2) fail(ErrorCode::kInvalidArgument, "delta needs n ≥ 0, d ≥ 2");
  if (n % 2 == 0) return (n / 2) * d;
  return ((n - 1) / 2) * d + 1;
}

int DegreeFunction::operator()(int n) const {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "degree function needs n ≥ 0");
  if (kind == Kind::kDelta) return delta_degree(n, d);
  if (n >= static_cast<int>(table.size()))
    fail(ErrorCode::kInvalidArgument, "degree function queried beyond its domain");
  return table[n];
}

int DegreeFunction::domain_cap() const {
  return kind == Kind::kDelta ? -1 : static_cast<int>(table.size()) - 1;
}

std::string DegreeFunction::str() const {
  if (kind == Kind::kDelta) return "delta:" + std::to_string(d);
  std::ostringstream os;
  os << "table:";
  for (size_t i = 0; i < table.size(); ++i) {
    if (i) os << ',';
    os << table[i];
  }
  return os.str();
}

DegreeFunction DegreeFunction::delta(int d) {
  if (d < 2) fail(ErrorCode::kInvalidArgument, "delta needs d ≥ 2");
  DegreeFunction f;
  f.kind = Kind::kDelta;
  f.d = d;
  return f;
}

DegreeFunction DegreeFunction::explicit_table(std::vector<int> values) {
  DegreeFunction f;
  f.kind = Kind::kTable;
  f.table = std::move(values);
  for (size_t n = 0; n < f.table.size(); ++n)
    if (f.table[n] < static_cast<int>(n))
      fail(ErrorCode::kInvalidArgument,
           "degree functions must satisfy F(n) ≥ n; violated at n=" +
               std::to_string(n));
  return f;
}

DegreeFunction DegreeFunction::parse(const std::string& text) {
  if (text.rfind("delta:", 0) == 0) {
    try {
      return delta(std::stoi(text.substr(6)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "bad degree function: " + text);
    }
  }
  if (text.rfind("table:", 0) == 0) {
    std::vector<int> vals;
    std::stringstream ss(text.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail(ErrorCode::kParse, "bad degree function: " + text);
      }
    }
    if (vals.empty()) fail(ErrorCode::kParse, "empty degree table: " + text);
    return explicit_table(std::move(vals));
  }
  fail(ErrorCode::kParse, "bad degree function: " + text);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kOutOfScope: return "out_of_scope";
  }
  return "?";
}

DKoszulCheck is_d_koszul_monomial(const TipSet& rho, int d) {
  if (d < 2) fail(ErrorCode::kInvalidArgument, "d must be ≥ 2");
  for (const Path& t : rho.paths())
    if (t.length() != d)
      fail(ErrorCode::kMixedDegreeInput,
           "relation " + t.str() + " has length " + std::to_string(t.length()) +
               ", expected " + std::to_string(d));

  DKoszulCheck out;
  // Route A: maximal overlap lengths.
  for (const Path& tp : rho.paths()) {
    for (const Path& t : rho.paths()) {
      for (const Path& w : maximal_overlaps(tp, t, rho.paths()))
        if (w.length() != d + 1) out.overlap_witnesses.push_back(w);
    }
  }
  std::sort(out.overlap_witnesses.begin(), out.overlap_witnesses.end());
  out.overlap_witnesses.erase(
      std::unique(out.overlap_witnesses.begin(), out.overlap_witnesses.end()),
      out.overlap_witnesses.end());

  // Route B: every length-d window of every overlap word lies in rho.
  for (const Path& p : rho.paths()) {
    for (const Path& q : rho.paths()) {
      for (const auto& w : overlaps(p, q)) {
        Path word = w.word();
        bool bad = false;
        for (int off = 0; off + d <= word.length() && !bad; ++off)
          if (!rho.contains(word.slice(off, d))) bad = true;
        if (bad) out.window_witnesses.push_back(word);
      }
    }
  }
  std::sort(out.window_witnesses.begin(), out.window_witnesses.end());
  out.window_witnesses.erase(
      std::unique(out.window_witnesses.begin(), out.window_witnesses.end()),
      out.window_witnesses.end());

  bool route_a = out.overlap_witnesses.empty();
  bool route_b = out.window_witnesses.empty();
  if (route_a != route_b)
    fail(ErrorCode::kInternal, "overlap and window routes disagree");
  out.value = route_a;
  return out;
}

FCheck check_f_determined(const BettiTable& table, const DegreeFunction& f,
                          FMode mode, int max_n) {
  FCheck out;
  int hi = max_n;
  if (f.domain_cap() >= 0) hi = std::min(hi, f.domain_cap());
  for (int n = 0; n <= hi; ++n) {
    const BettiRow* row = table.find_row(n);
    if (!row) {
      hi = n - 1;
      break;
    }
    if (row->truncated)
      fail(ErrorCode::kTruncatedRow,
           "row " + std::to_string(n) + " is truncated at degree cap " +
               std::to_string(table.degree_cap));
    int want = f(n);
    for (const auto& [key, mult] : row->entries) {
      int deg = key.second;
      bool ok = mode == FMode::kStrict ? deg == want : (deg >= n && deg <= want);
      if (!ok) out.witnesses.emplace_back(n, deg);
    }
  }
  out.n_checked = hi;
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()),
                      out.witnesses.end());
  out.value = out.witnesses.empty();
  return out;
}

TwoDCheck is_2d_determined_monomial(const TipSet& rho, int d) {
  if (d < 3) fail(ErrorCode::kWrongDegreeProfile, "two-degree profile needs d ≥ 3");
  for (const Path& t : rho.paths())
    if (t.length() != 2 && t.length() != d)
      fail(ErrorCode::kWrongDegreeProfile,
           "relation " + t.str() + " has length outside {2, " +
               std::to_string(d) + "}");
  TwoDCheck out;
  TipSet rho_d = rho.stratum(d);
  if (rho_d.empty()) {
    out.value = Verdict::kOutOfScope;
    return out;
  }
  DKoszulCheck inner = is_d_koszul_monomial(rho_d, d);
  out.value = inner.value ? Verdict::kYes : Verdict::kNo;
  out.witnesses = inner.overlap_witnesses;
  return out;
}

ExtGenCheck check_ext_generation_012(const ChainTable& table) {
  ExtGenCheck out;
  out.n_max = table.n_max();
  for (int n = 3; n < table.num_levels(); ++n) {
    for (int i = 0; i < static_cast<int>(table.level(n).size()); ++i) {
      const Chain& c = table.level(n)[i];
      if (c.r.length() == 1) continue;
      const Chain& parent = table.level(n - 1)[c.parent];
      Path rs = compose(c.r, parent.r);
      if (table.rho().contains(rs)) continue;
      out.witnesses.emplace_back(n, i);
    }
  }
  out.value = out.witnesses.empty();
  return out;
}

namespace {

std::string entry_witness(int n, int degree) {
  return "n=" + std::to_string(n) + " degree=" + std::to_string(degree);
}

std::vector<std::string> path_witnesses(const std::vector<Path>& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const Path& p : paths) out.push_back(p.str());
  return out;
}

// Definite failures of the weak bound visible in an oracle table:
// entries with degree above F(n) refute weak F-determinedness outright,
// truncated or not.
std::vector<std::pair<int, int>> oracle_weak_violations(const BettiTable& table,
                                                        const DegreeFunction& f,
                                                        int max_n) {
  std::vector<std::pair<int, int>> out;
  int hi = max_n;
  if (f.domain_cap() >= 0) hi = std::min(hi, f.domain_cap());
  for (int n = 0; n <= hi; ++n) {
    const BettiRow* row = table.find_row(n);
    if (!row) break;
    for (const auto& [key, mult] : row->entries)
      if (key.second > f(n)) out.emplace_back(n, key.second);
  }
  return out;
}

}  // namespace

KoszulReport classify(const AlgebraInput& input, const ClassifyBounds& bounds) {
  auto t0 = std::chrono::steady_clock::now();
  const Quiver& q = *input.quiver;
  AdmissibleOrder order = input.order();

  KoszulReport rep;
  rep.name = input.name;
  rep.field = input.field.str();
  rep.order_kind = AdmissibleOrder::kind_name(input.order_kind);
  rep.order_priorities = input.order_priorities;
  rep.num_vertices = q.num_vertices();
  rep.num_arrows = q.num_arrows();
  rep.num_relations = static_cast<int>(input.relations.size());
  rep.max_degree = bounds.max_degree;
  rep.max_n = bounds.max_n;

  GroebnerBasis gb =
      buchberger(q, input.field, input.relations, order, bounds.max_degree);
  rep.gb_size = static_cast<int>(gb.elements().size());
  rep.gb_complete = gb.complete();
  rep.gb_valid_to = gb.valid_to_degree();
  rep.monomial = gb.is_monomial();
  for (const auto& [deg, elems] : stratify_by_degree(gb))
    rep.gb_degrees.push_back(deg);

  TipSet tips = tip_ideal(gb);
  ChainTable chains = build_chains(tips, bounds.max_n);
  BettiTable chain_table = degree_table(chains);

  for (int n = 2; n < chains.num_levels(); ++n) {
    if (chains.level(n).empty()) {
      rep.resolution_stops_at = n;
      break;
    }
  }

  // Shape and d.
  std::set<int> degs(rep.gb_degrees.begin(), rep.gb_degrees.end());
  if (degs.empty()) {
    rep.shape = "none";
  } else if (degs.size() == 1) {
    rep.shape = "single";
    rep.d = *degs.begin();
  } else if (degs.size() == 2 && degs.count(2)) {
    rep.shape = "two_degree";
    rep.d = *degs.rbegin();
  } else {
    rep.shape = "mixed";
  }
  if (bounds.override_d) rep.d = *bounds.override_d;

  // Bounded minimality test of the combinatorial resolution: the oracle
  // table must reproduce the chain table row by row.
  BettiTable oracle;
  bool have_oracle = false;
  if (gb.complete() || gb.valid_to_degree() >= bounds.max_degree) {
    oracle = oracle_resolution(q, gb, bounds.max_n, bounds.max_degree);
    have_oracle = true;
    rep.ags_tested = true;
    rep.ags_n = bounds.max_n;
    rep.ags_degree_cap = bounds.max_degree;
    rep.ags_holds =
        betti_rows_equal(chain_table, oracle, bounds.max_n, bounds.max_degree);
  }

  const std::string kInconclusiveNote =
      "basis incomplete at the degree bound; higher-degree elements may exist";

  // ---- d-Koszul verdict ----
  if (rep.shape == "none") {
    rep.d_koszul.value = Verdict::kOutOfScope;
    rep.d_koszul.note = "no relations";
  } else if (rep.shape == "single") {
    int d = *rep.d;
    DKoszulCheck mono = is_d_koszul_monomial(tips, d);
    rep.d_koszul.rules = {"monomial-overlap-criterion", "overlap-window-criterion"};
    rep.d_koszul.witnesses = path_witnesses(mono.overlap_witnesses);
    if (gb.complete()) {
      rep.d_koszul.value = mono.value ? Verdict::kYes : Verdict::kNo;
      rep.d_koszul.exact = true;
      rep.d_koszul.rules.push_back("single-degree-transfer");
    } else {
      rep.d_koszul.value = Verdict::kInconclusive;
      rep.d_koszul.bound = gb.valid_to_degree();
      rep.d_koszul.note = kInconclusiveNote;
    }
  } else {
    // Several relation degrees: the second projective already has
    // generators in more than one degree.
    rep.d_koszul.value = Verdict::kNo;
    rep.d_koszul.exact = gb.complete();
    if (!gb.complete()) rep.d_koszul.bound = gb.valid_to_degree();
    rep.d_koszul.rules = {"relation-degree-shape"};
    for (int deg : rep.gb_degrees)
      rep.d_koszul.witnesses.push_back("relation degree " + std::to_string(deg));
  }

  // ---- 2-d-determined verdict ----
  if (rep.shape == "two_degree") {
    int d = *rep.d;
    TipSet tips_d = tips.stratum(d);
    DKoszulCheck stratum = is_d_koszul_monomial(tips_d, d);
    rep.two_d_determined.witnesses = path_witnesses(stratum.overlap_witnesses);
    if (stratum.value) {
      rep.two_d_determined.rules = {"two-degree-stratum-transfer"};
      if (gb.complete()) {
        rep.two_d_determined.value = Verdict::kYes;
        rep.two_d_determined.exact = true;
      } else {
        rep.two_d_determined.value = Verdict::kInconclusive;
        rep.two_d_determined.bound = gb.valid_to_degree();
        rep.two_d_determined.note = kInconclusiveNote;
      }
    } else if (rep.monomial) {
      rep.two_d_determined.value = Verdict::kNo;
      rep.two_d_determined.exact = true;
      rep.two_d_determined.rules = {"monomial-two-degree-criterion"};
    } else {
      // One-directional criterion failed; look for a definite witness in
      // the minimal-resolution table.
      rep.two_d_determined.rules = {"two-degree-stratum-transfer"};
      std::vector<std::pair<int, int>> viol;
      if (have_oracle)
        viol = oracle_weak_violations(oracle, DegreeFunction::delta(d), bounds.max_n);
      if (!viol.empty()) {
        rep.two_d_determined.value = Verdict::kNo;
        rep.two_d_determined.exact = true;
        rep.two_d_determined.rules.push_back("oracle-witness");
        rep.two_d_determined.witnesses.clear();
        for (auto [n, deg] : viol)
          rep.two_d_determined.witnesses.push_back(entry_witness(n, deg));
      } else {
        rep.two_d_determined.value = Verdict::kInconclusive;
        rep.two_d_determined.bound = bounds.max_n;
        rep.two_d_determined.note =
            "stratum criterion failed but no bounded counterexample found";
      }
    }
  } else if (rep.shape == "single" && rep.d && *rep.d >= 3) {
    // Degenerate two-degree shape with an empty quadratic stratum.
    if (rep.d_koszul.value == Verdict::kYes) {
      rep.two_d_determined = rep.d_koszul;
      rep.two_d_determined.note = "quadratic stratum empty";
    } else {
      int d = *rep.d;
      FCheck weak = check_f_determined(chain_table, DegreeFunction::delta(d),
                                       FMode::kWeak, bounds.max_n);
      rep.two_d_determined.rules = {"chain-weak-delta-check"};
      if (!weak.value) {
        rep.two_d_determined.value = Verdict::kNo;
        rep.two_d_determined.exact = rep.monomial && gb.complete();
        for (auto [n, deg] : weak.witnesses)
          rep.two_d_determined.witnesses.push_back(entry_witness(n, deg));
      } else {
        rep.two_d_determined.value = Verdict::kInconclusive;
        rep.two_d_determined.bound = bounds.max_n;
        rep.two_d_determined.note = "weak delta bound holds up to the level bound";
      }
    }
  } else {
    rep.two_d_determined.value = Verdict::kOutOfScope;
    rep.two_d_determined.note =
        rep.shape == "none" ? "no relations" : "relation degrees not of the {2, d} shape";
  }

  // ---- Ext generation in degrees 0, 1, 2 ----
  {
    ExtGenCheck ext = check_ext_generation_012(chains);
    rep.ext_generated_012.rules = {"ext-factorization-criterion"};
    for (auto [n, i] : ext.witnesses)
      rep.ext_generated_012.witnesses.push_back(
          "level " + std::to_string(n) + ": " + chains.level(n)[i].word.str());
    if (!rep.monomial) {
      rep.ext_generated_012.value = Verdict::kInconclusive;
      rep.ext_generated_012.bound = bounds.max_n;
      rep.ext_generated_012.note =
          "factorization data for the associated monomial algebra only";
    } else if (ext.value) {
      rep.ext_generated_012.value = Verdict::kYes;
      rep.ext_generated_012.exact = false;
      rep.ext_generated_012.bound = bounds.max_n;
    } else {
      rep.ext_generated_012.value = Verdict::kNo;
      rep.ext_generated_012.exact = true;
    }
  }

  // ---- degree-function checks ----
  for (const auto& [f, mode] : bounds.f_checks) {
    FVerdict fv;
    fv.function = f.str();
    fv.mode = mode == FMode::kStrict ? "strict" : "weak";
    FCheck mon = check_f_determined(chain_table, f, mode, bounds.max_n);
    fv.monomial_side.value = mon.value ? Verdict::kYes : Verdict::kNo;
    fv.monomial_side.exact = false;
    fv.monomial_side.bound = mon.n_checked;
    for (auto [n, deg] : mon.witnesses)
      fv.monomial_side.witnesses.push_back(entry_witness(n, deg));

    fv.algebra_side.bound = mon.n_checked;
    if (mon.value) {
      fv.algebra_side.value = Verdict::kYes;
      fv.algebra_side.rules = {mode == FMode::kStrict
                                   ? "strict-transfer-minimality"
                                   : "weak-bound-transfer"};
    } else if (mode == FMode::kWeak && have_oracle) {
      auto viol = oracle_weak_violations(oracle, f, bounds.max_n);
      if (!viol.empty()) {
        fv.algebra_side.value = Verdict::kNo;
        fv.algebra_side.rules = {"oracle-witness"};
        for (auto [n, deg] : viol)
          fv.algebra_side.witnesses.push_back(entry_witness(n, deg));
      } else {
        fv.algebra_side.value = Verdict::kInconclusive;
      }
    } else {
      fv.algebra_side.value = Verdict::kInconclusive;
    }
    rep.f_determined.push_back(std::move(fv));
  }

  rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return rep;
}

namespace {

void render_verdict(std::ostringstream& os, const std::string& label,
                    const VerdictInfo& v) {
  os << "  " << label << ": " << verdict_name(v.value);
  if (v.value == Verdict::kYes || v.value == Verdict::kNo)
    os << (v.exact ? " (exact)" : " (up to bound " + std::to_string(v.bound) + ")");
  if (!v.rules.empty()) {
    os << "  [";
    for (size_t i = 0; i < v.rules.size(); ++i) {
      if (i) os << ", ";
      os << v.rules[i];
    }
    os << "]";
  }
  os << "\n";
  if (!v.note.empty()) os << "      note: " << v.note << "\n";
  for (const auto& w : v.witnesses) os << "      witness: " << w << "\n";
}

}  // namespace

std::string render_report_text(const KoszulReport& r) {
  std::ostringstream os;
  os << "algebra" << (r.name.empty() ? "" : " " + r.name) << ": "
     << r.num_vertices << " vertices, " << r.num_arrows << " arrows, "
     << r.num_relations << " relations, field " << r.field << ", order "
     << r.order_kind << "\n";
  os << "reduced basis: " << r.gb_size << " elements, degrees {";
  for (size_t i = 0; i < r.gb_degrees.size(); ++i) {
    if (i) os << ", ";
    os << r.gb_degrees[i];
  }
  os << "}, " << (r.gb_complete ? "complete" : "truncated") << " at degree "
     << r.gb_valid_to << (r.monomial ? ", monomial" : "") << "\n";
  os << "shape: " << r.shape;
  if (r.d) os << " (d = " << *r.d << ")";
  os << "\n";
  if (r.resolution_stops_at)
    os << "resolution stops: level " << *r.resolution_stops_at << " is empty\n";
  os << "verdicts:\n";
  render_verdict(os, "d_koszul", r.d_koszul);
  render_verdict(os, "two_d_determined", r.two_d_determined);
  render_verdict(os, "ext_generated_012", r.ext_generated_012);
  for (const auto& fv : r.f_determined) {
    render_verdict(os, fv.function + " (" + fv.mode + ", monomial side)",
                   fv.monomial_side);
    render_verdict(os, fv.function + " (" + fv.mode + ", algebra side)",
                   fv.algebra_side);
  }
  if (r.ags_tested)
    os << "combinatorial resolution minimal (tested to n=" << r.ags_n
       << ", degree<=" << r.ags_degree_cap << "): " << (r.ags_holds ? "yes" : "no")
       << "\n";
  return os.str();
}

}  // namespace pathalg
