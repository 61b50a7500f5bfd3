// Degree tables of graded projective resolutions: per homological degree,
// the multiset of (vertex, internal degree) of projective generators.
#ifndef PATHALG_BETTI_HPP
#define PATHALG_BETTI_HPP

#include <map>
#include <string>
#include <vector>

#include "pathalg/quiver.hpp"

namespace pathalg {

struct BettiRow {
  int n = 0;
  // (vertex, internal degree) -> multiplicity
  std::map<std::pair<int, int>, int> entries;
  // True when entries above the table's degree cap may exist but were
  // not computed.
  bool truncated = false;

  bool operator==(const BettiRow& o) const {
    return n == o.n && entries == o.entries && truncated == o.truncated;
  }
};

struct BettiTable {
  std::string method;  // "chains" | "oracle"
  int degree_cap = -1;  // -1: exact at all degrees
  std::vector<BettiRow> rows;

  BettiRow& row(int n);
  const BettiRow* find_row(int n) const;

  // Entries of row n with internal degree ≤ cap (all entries if cap < 0).
  std::map<std::pair<int, int>, int> filtered_row(int n, int cap) const;

  bool operator==(const BettiTable& o) const {
    return method == o.method && degree_cap == o.degree_cap && rows == o.rows;
  }
};

// Row-by-row equality of the degree-≤cap parts, for rows 0..max_n.
bool betti_rows_equal(const BettiTable& a, const BettiTable& b, int max_n,
                      int degree_cap);

// Row-wise sub-multiset: every (vertex, degree) of `a` (degree ≤ cap)
// occurs in `b` with at least the same multiplicity.
bool betti_rows_submultiset(const BettiTable& a, const BettiTable& b, int max_n,
                            int degree_cap);

}  // namespace pathalg

#endif
