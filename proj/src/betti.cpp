#include "pathalg/betti.hpp"

namespace pathalg {

BettiRow& BettiTable::row(int n) {
  for (auto& r : rows)
    if (r.n == n) return r;
  rows.push_back(BettiRow{n, {}, false});
  return rows.back();
}

const BettiRow* BettiTable::find_row(int n) const {
  for (const auto& r : rows)
    if (r.n == n) return &r;
  return nullptr;
}

std::map<std::pair<int, int>, int> BettiTable::filtered_row(int n, int cap) const {
  std::map<std::pair<int, int>, int> out;
  const BettiRow* r = find_row(n);
  if (!r) return out;
  for (const auto& [key, mult] : r->entries)
    if (cap < 0 || key.second <= cap) out[key] = mult;
  return out;
}

bool betti_rows_equal(const BettiTable& a, const BettiTable& b, int max_n,
                      int degree_cap) {
  for (int n = 0; n <= max_n; ++n)
    if (a.filtered_row(n, degree_cap) != b.filtered_row(n, degree_cap))
      return false;
  return true;
}

bool betti_rows_submultiset(const BettiTable& a, const BettiTable& b, int max_n,
                            int degree_cap) {
  for (int n = 0; n <= max_n; ++n) {
    auto small = a.filtered_row(n, degree_cap);
    auto big = b.filtered_row(n, degree_cap);
    for (const auto& [key, mult] : small) {
      auto it = big.find(key);
      if (it == big.end() || it->second < mult) return false;
    }
  }
  return true;
}

}  // namespace pathalg
