// Admissible-path sets AP(n) for a tip anti-chain ρ: the index sets of
// the projective modules in the combinatorial resolution. Level 0 holds
// the vertices, level 1 the arrows, level 2 the ρ elements; each higher
// chain extends its parent on the left, so the overlap structure chains
// from the right end of the word towards the left.
#ifndef PATHALG_CHAINS_HPP
#define PATHALG_CHAINS_HPP

#include <vector>

#include "pathalg/betti.hpp"
#include "pathalg/groebner.hpp"

namespace pathalg {

struct Chain {
  Path word;
  int level = 0;
  int parent = -1;  // index into the previous level; -1 at level 0
  Path r;           // word = r · parent.word (left extension)
};

class ChainTable {
 public:
  ChainTable(TipSet rho, int n_max) : rho_(std::move(rho)), n_max_(n_max) {}

  const TipSet& rho() const { return rho_; }
  int n_max() const { return n_max_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }
  const std::vector<Chain>& level(int n) const { return levels_.at(n); }
  std::vector<std::vector<Chain>>& mutable_levels() { return levels_; }

 private:
  TipSet rho_;
  int n_max_;
  std::vector<std::vector<Chain>> levels_;
};

// Builds AP(0..n_max). A chain at level n ≥ 3 is w = r·c for a level-(n−1)
// chain c = s·c' (s the parent's own extension), where some a₂ ∈ ρ is a
// prefix of r·s with ℓ(r) < ℓ(a₂), and no element of ρ occurs in r·s
// starting strictly inside r. The prefix a₂ reaching into s is what makes
// consecutive differentials compose to zero; the no-occurrence condition
// is exactly minimality of the new generator (shorter left extensions
// must not already annihilate).
ChainTable build_chains(const TipSet& rho, int n_max);

// The ρ-factor sequence (p_{n−1}, …, p₁) of a chain: p at each step is
// the unique ρ-prefix of the current word; recursion follows parents.
std::vector<Path> admissible_sequence(const ChainTable& table, int level,
                                      int index);

// Projective degree data: row n lists (source vertex of word, ℓ(word))
// per chain. Simultaneously the minimal-resolution table of the monomial
// algebra and the combinatorial-resolution degree data of any algebra
// with these tips.
BettiTable degree_table(const ChainTable& table);

}  // namespace pathalg

#endif
