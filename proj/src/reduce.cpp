#include "pathalg/reduce.hpp"

namespace pathalg {

namespace {

struct DivisorInfo {
  Path tip;
  Scalar lead;
};

// Leftmost occurrence of the order-largest divisor tip inside p, or -1.
struct SiteHit {
  int divisor = -1;
  int offset = -1;
};

SiteHit find_site(const Path& p, const std::vector<AlgebraElement>& divisors,
                  const std::vector<DivisorInfo>& info,
                  const AdmissibleOrder& order) {
  SiteHit best;
  for (size_t i = 0; i < divisors.size(); ++i) {
    if (info[i].tip.length() > p.length()) continue;
    auto occ = subpath_occurrences(info[i].tip, p, /*proper=*/false);
    if (occ.empty()) continue;
    if (best.divisor < 0 ||
        order.greater(info[i].tip, info[best.divisor].tip) ||
        (order.compare(info[i].tip, info[best.divisor].tip) == Ordering::kEqual &&
         occ.front() < best.offset)) {
      best.divisor = static_cast<int>(i);
      best.offset = occ.front();
    }
  }
  return best;
}

}  // namespace

ReductionResult reduce_traced(const AlgebraElement& x,
                              const std::vector<AlgebraElement>& divisors,
                              const AdmissibleOrder& order,
                              ReduceStrategy strategy) {
  const Field& field = x.field();
  std::vector<DivisorInfo> info;
  info.reserve(divisors.size());
  for (const auto& g : divisors) {
    auto [t, c] = tip(g, order);
    info.push_back(DivisorInfo{t, c});
  }

  ReductionResult out;
  out.normal_form = x;
  while (true) {
    // Pick the support path to rewrite per strategy.
    const Path* site_path = nullptr;
    SiteHit site;
    for (const auto& [p, c] : out.normal_form.terms()) {
      SiteHit hit = find_site(p, divisors, info, order);
      if (hit.divisor < 0) continue;
      bool take = site_path == nullptr;
      if (!take) {
        take = strategy == ReduceStrategy::kLargestFirst
                   ? order.greater(p, *site_path)
                   : order.less(p, *site_path);
      }
      if (take) {
        site_path = &p;
        site = hit;
      }
    }
    if (!site_path) break;

    const AlgebraElement& g = divisors[site.divisor];
    const Path& t = info[site.divisor].tip;
    Path left = site_path->slice(0, site.offset);
    Path right = site_path->slice(site.offset + t.length(),
                                  site_path->length() - site.offset - t.length());
    Scalar factor = out.normal_form.coeff(*site_path).div(field, info[site.divisor].lead);
    AlgebraElement ugv = g.mul_left(left).mul_right(right);
    out.normal_form = out.normal_form.sub(ugv.scale(factor));
    out.trace.push_back(RewriteStep{site.divisor, left, right, factor});
  }
  return out;
}

AlgebraElement reduce(const AlgebraElement& x,
                      const std::vector<AlgebraElement>& divisors,
                      const AdmissibleOrder& order, ReduceStrategy strategy) {
  return reduce_traced(x, divisors, order, strategy).normal_form;
}

AlgebraElement replay_trace(const Quiver& q, const Field& f,
                            const std::vector<AlgebraElement>& divisors,
                            const std::vector<RewriteStep>& trace) {
  AlgebraElement acc(q, f);
  for (const auto& step : trace) {
    AlgebraElement ugv =
        divisors[step.divisor_index].mul_left(step.left).mul_right(step.right);
    acc = acc.add(ugv.scale(step.factor));
  }
  return acc;
}

}  // namespace pathalg
