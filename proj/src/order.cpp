#include "pathalg/order.hpp"

#include <algorithm>

namespace pathalg {

AdmissibleOrder::AdmissibleOrder(const Quiver& q, Kind kind,
                                 const std::vector<std::string>& priorities)
    : quiver_(&q), kind_(kind), priority_names_(priorities) {
  rank_.assign(q.num_arrows(), -1);
  int next = 0;
  // Unlisted arrows first (declaration order), listed ones above them in
  // list order, so the last listed arrow is the largest.
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (std::find(priorities.begin(), priorities.end(), q.arrow(a).name) ==
        priorities.end())
      rank_[a] = next++;
  }
  for (const auto& name : priorities) rank_[q.arrow_index(name)] = next++;
}

Ordering AdmissibleOrder::compare(const Path& p, const Path& q) const {
  if (p.length() != q.length())
    return p.length() < q.length() ? Ordering::kLess : Ordering::kGreater;
  int n = p.length();
  if (n == 0) {
    if (p.source() == q.source()) return Ordering::kEqual;
    return p.source() < q.source() ? Ordering::kLess : Ordering::kGreater;
  }
  if (kind_ == Kind::kDeglex) {
    for (int i = 0; i < n; ++i) {
      int a = rank_[p.arrow_at(i)], b = rank_[q.arrow_at(i)];
      if (a != b) return a < b ? Ordering::kLess : Ordering::kGreater;
    }
    return Ordering::kEqual;
  }
  for (int i = n - 1; i >= 0; --i) {
    int a = rank_[p.arrow_at(i)], b = rank_[q.arrow_at(i)];
    if (a != b) return a > b ? Ordering::kLess : Ordering::kGreater;
  }
  return Ordering::kEqual;
}

std::string AdmissibleOrder::kind_name(Kind k) {
  return k == Kind::kDeglex ? "deglex" : "degrevlex";
}

AdmissibleOrder::Kind AdmissibleOrder::parse_kind(const std::string& name) {
  if (name == "deglex") return Kind::kDeglex;
  if (name == "degrevlex") return Kind::kDegrevlex;
  fail(ErrorCode::kParse, "unknown order kind: " + name);
}

std::pair<Path, Scalar> tip(const AlgebraElement& x, const AdmissibleOrder& order) {
  if (x.is_zero()) fail(ErrorCode::kZeroElement, "tip of zero element");
  const Path* best = nullptr;
  for (const auto& [p, c] : x.terms()) {
    if (!best || order.greater(p, *best)) best = &p;
  }
  return {*best, x.coeff(*best)};
}

AlgebraElement make_monic(const AlgebraElement& x, const AdmissibleOrder& order) {
  auto [t, c] = tip(x, order);
  if (c.is_one(x.field())) return x;
  return x.scale(c.inv(x.field()));
}

}  // namespace pathalg
