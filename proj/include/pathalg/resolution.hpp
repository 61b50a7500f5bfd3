// Resolution degree tables from the linear-algebra route: graded kernels
// over normal-word bases with exact elimination. Deliberately independent
// of the chain combinatorics — this is the ground truth the chain tables
// are checked against.
#ifndef PATHALG_RESOLUTION_HPP
#define PATHALG_RESOLUTION_HPP

#include <map>
#include <optional>
#include <vector>

#include "pathalg/betti.hpp"
#include "pathalg/chains.hpp"
#include "pathalg/groebner.hpp"

namespace pathalg {

// Paths containing no tip as a subpath, per (source, target, length),
// up to a degree cap. These form a K-basis of the quotient algebra.
class NormalBasis {
 public:
  NormalBasis(const Quiver& q, const TipSet& tips, int max_degree);

  const Quiver& quiver() const { return *quiver_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Path>& words(int length, int source, int target) const;
  // All normal words of one length, any endpoints.
  std::vector<Path> words_of_length(int length) const;

  // Smallest length with no normal words at all; the algebra is finite
  // dimensional iff such a length exists within the cap.
  std::optional<int> first_empty_length() const { return first_empty_; }

 private:
  const Quiver* quiver_;
  int max_degree_;
  // [length][source*V+target]
  std::vector<std::vector<std::vector<Path>>> table_;
  std::vector<Path> empty_;
  std::optional<int> first_empty_;
};

NormalBasis normal_words(const Quiver& q, const TipSet& tips, int max_degree);

// A minimal generator of the n-th syzygy: a left-uniform element of
// ⊕_j Λ·g_j over the previous level's generators.
struct OracleGen {
  int vertex = -1;  // source vertex of the element
  int degree = 0;   // internal degree
  struct Coord {
    int prev = -1;  // previous-level generator index
    Path word;      // normal word multiplier
    Scalar coeff;
  };
  std::vector<Coord> element;
};

struct OracleResolution {
  std::vector<std::vector<OracleGen>> levels;
  BettiTable table;
};

// Minimal graded resolution data of the degree-0 part, computed degree by
// degree: kernels as exact matrices over normal-word bases, new
// generators extracted modulo the radical times earlier kernel elements.
// Rows are exact for internal degrees ≤ max_degree; the truncation flag
// marks rows that may continue above the cap.
OracleResolution oracle_resolution_full(const Quiver& q, const GroebnerBasis& gb,
                                        int max_n, int max_degree);
BettiTable oracle_resolution(const Quiver& q, const GroebnerBasis& gb,
                             int max_n, int max_degree);

// Convenience for monomial input: wraps the tip set as a monomial basis.
BettiTable oracle_resolution(const Quiver& q, const TipSet& tips, const Field& f,
                             int max_n, int max_degree);

GroebnerBasis monomial_basis(const Quiver& q, const TipSet& tips, const Field& f);

// The combinatorial differential of the monomial resolution: the
// generator indexed by a chain maps to r times its parent's generator.
struct DifferentialEntry {
  Path multiplier;  // r
  int parent = -1;
};
std::vector<std::vector<DifferentialEntry>> monomial_differential(const ChainTable& table);

// d∘d = 0: for every chain at level ≥ 2 the composite multiplier word
// r_n·r_{n−1} vanishes in the monomial algebra. Returns offending chains.
std::vector<std::pair<int, int>> differential_square_witnesses(const ChainTable& table);

}  // namespace pathalg

#endif
