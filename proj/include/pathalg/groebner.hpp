// Buchberger completion for path algebras, truncated at a degree bound.
// Homogeneous uniform input, degree-graded S-element queue, full
// inter-reduction per degree level; the output is the degree-≤D slice of
// the unique reduced Gröbner basis.
#ifndef PATHALG_GROEBNER_HPP
#define PATHALG_GROEBNER_HPP

#include <map>
#include <set>
#include <vector>

#include "pathalg/reduce.hpp"

namespace pathalg {

// An anti-chain of paths of length ≥ 2 (relation tips, ρ).
class TipSet {
 public:
  TipSet() = default;
  TipSet(const Quiver& q, std::vector<Path> paths);

  const Quiver& quiver() const { return *quiver_; }
  const std::vector<Path>& paths() const { return paths_; }
  bool contains(const Path& p) const;
  bool empty() const { return paths_.empty(); }
  int size() const { return static_cast<int>(paths_.size()); }

  // Degrees present, ascending.
  std::vector<int> degrees() const;
  TipSet stratum(int degree) const;

 private:
  const Quiver* quiver_ = nullptr;
  std::vector<Path> paths_;  // sorted structurally, duplicate-free
};

class GroebnerBasis {
 public:
  GroebnerBasis(const Quiver& q, const Field& f, const AdmissibleOrder& order,
                std::vector<AlgebraElement> elements, int valid_to_degree,
                bool complete);

  const Quiver& quiver() const { return *quiver_; }
  const Field& field() const { return field_; }
  const AdmissibleOrder& order() const { return order_; }
  const std::vector<AlgebraElement>& elements() const { return elements_; }
  int valid_to_degree() const { return valid_to_degree_; }
  bool complete() const { return complete_; }
  bool is_monomial() const;

 private:
  const Quiver* quiver_;
  Field field_;
  AdmissibleOrder order_;
  std::vector<AlgebraElement> elements_;  // monic, sorted by (degree, tip)
  int valid_to_degree_;
  bool complete_;
};

// The reduced Gröbner basis of ⟨generators⟩ up to degree max_degree.
// Non-uniform generators are split through vertex idempotents first;
// inhomogeneous or degree-<2 components are rejected. complete=true iff
// no potentially nonzero S-element above the bound was discarded.
GroebnerBasis buchberger(const Quiver& quiver, const Field& field,
                         const std::vector<AlgebraElement>& generators,
                         const AdmissibleOrder& order, int max_degree);

TipSet tip_ideal(const GroebnerBasis& g);

std::map<int, std::vector<AlgebraElement>> stratify_by_degree(const GroebnerBasis& g);

}  // namespace pathalg

#endif
