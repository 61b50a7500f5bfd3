#include "pathalg/chains.hpp"

#include <algorithm>
#include <map>

namespace pathalg {

namespace {

// True iff some rho element occurs in `word` starting at an offset in
// [1, r_len-1] (0-indexed). Such an occurrence would be reachable from a
// shorter left extension, so the candidate extension is not minimal.
bool has_inner_occurrence(const Path& word, int r_len, const TipSet& rho) {
  for (const Path& t : rho.paths()) {
    for (int off = 1; off < r_len && off + t.length() <= word.length(); ++off) {
      bool hit = true;
      for (int i = 0; i < t.length(); ++i) {
        if (word.arrow_at(off + i) != t.arrow_at(i)) {
          hit = false;
          break;
        }
      }
      if (hit) return true;
    }
  }
  return false;
}

}  // namespace

ChainTable build_chains(const TipSet& rho, int n_max) {
  if (n_max < 0) fail(ErrorCode::kInvalidArgument, "n_max must be ≥ 0");
  const Quiver& q = rho.quiver();
  ChainTable table(rho, n_max);
  auto& levels = table.mutable_levels();

  // Level 0: vertices.
  levels.emplace_back();
  for (int v = 0; v < q.num_vertices(); ++v)
    levels[0].push_back(Chain{Path::vertex(q, v), 0, -1, Path()});
  if (n_max == 0) return table;

  // Level 1: arrows; parent is the target vertex, r the arrow itself.
  levels.emplace_back();
  for (int a = 0; a < q.num_arrows(); ++a) {
    Path w = Path::of_arrows(q, {a});
    levels[1].push_back(Chain{w, 1, q.arrow(a).target, w});
  }
  if (n_max == 1) return table;

  // Level 2: rho; parent is the trailing arrow, r the rest of the word.
  levels.emplace_back();
  for (const Path& t : rho.paths()) {
    int last = t.arrow_at(t.length() - 1);
    levels[2].push_back(Chain{t, 2, last, t.slice(0, t.length() - 1)});
  }

  for (int n = 3; n <= n_max; ++n) {
    levels.emplace_back();
    auto& out = levels[n];
    const auto& parents = levels[n - 1];
    for (int pi = 0; pi < static_cast<int>(parents.size()); ++pi) {
      const Chain& parent = parents[pi];
      const Path& s = parent.r;
      for (const Path& a2 : rho.paths()) {
        int lo = std::max(1, a2.length() - s.length());
        for (int k = lo; k <= a2.length() - 1; ++k) {
          // r = a2[0,k); the remainder of a2 must be a prefix of s.
          int rest = a2.length() - k;
          bool match = true;
          for (int i = 0; i < rest; ++i) {
            if (a2.arrow_at(k + i) != s.arrow_at(i)) {
              match = false;
              break;
            }
          }
          if (!match) continue;
          Path r = a2.slice(0, k);
          Path rs = compose(r, s);
          if (has_inner_occurrence(rs, k, rho)) continue;
          Path word = compose(r, parent.word);
          out.push_back(Chain{word, n, pi, r});
        }
      }
    }
    // Distinct (a2, k) pairs over one parent yield distinct words, and the
    // unique-factorization property forbids the same word over two
    // parents; surface any violation instead of silently merging.
    std::map<Path, int> seen;
    for (const auto& c : out) {
      auto [it, fresh] = seen.emplace(c.word, c.parent);
      if (!fresh && it->second != c.parent)
        fail(ErrorCode::kInternal,
             "chain word " + c.word.str() + " has two parent factorizations");
      if (!fresh)
        fail(ErrorCode::kInternal,
             "duplicate chain word " + c.word.str() + " over one parent");
    }
  }
  return table;
}

std::vector<Path> admissible_sequence(const ChainTable& table, int level,
                                      int index) {
  if (level < 2)
    fail(ErrorCode::kInvalidArgument, "admissible sequence needs level ≥ 2");
  const TipSet& rho = table.rho();
  std::vector<Path> seq;
  int n = level, i = index;
  while (n >= 2) {
    const Chain& c = table.level(n)[i];
    if (n == 2) {
      seq.push_back(c.word);
      break;
    }
    // The unique rho element that is a prefix of the word.
    const Path* found = nullptr;
    for (const Path& t : rho.paths()) {
      if (t.length() > c.word.length()) continue;
      if (c.word.slice(0, t.length()) == t) {
        found = &t;
        break;
      }
    }
    if (!found)
      fail(ErrorCode::kInternal, "chain word has no rho prefix: " + c.word.str());
    seq.push_back(*found);
    i = c.parent;
    --n;
  }
  return seq;
}

BettiTable degree_table(const ChainTable& table) {
  BettiTable out;
  out.method = "chains";
  out.degree_cap = -1;
  for (int n = 0; n < table.num_levels(); ++n) {
    BettiRow row;
    row.n = n;
    for (const auto& c : table.level(n))
      row.entries[{c.word.source(), c.word.length()}]++;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace pathalg
