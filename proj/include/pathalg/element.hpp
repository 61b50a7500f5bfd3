// Free-algebra elements: finite K-linear combinations of parallel-or-not
// paths, with uniformity and homogeneity predicates.
#ifndef PATHALG_ELEMENT_HPP
#define PATHALG_ELEMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "pathalg/quiver.hpp"
#include "pathalg/scalar.hpp"

namespace pathalg {

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Quiver& q, const Field& f) : quiver_(&q), field_(f) {}

  static AlgebraElement term(const Quiver& q, const Field& f, const Path& p,
                             const Scalar& c);

  const Quiver& quiver() const { return *quiver_; }
  const Field& field() const { return field_; }

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Path& p) const;

  // Adds c·p, dropping the term if the total vanishes.
  void add_term(const Path& p, const Scalar& c);

  AlgebraElement add(const AlgebraElement& o) const;
  AlgebraElement sub(const AlgebraElement& o) const;
  AlgebraElement scale(const Scalar& c) const;
  // Path-algebra product; mismatched concatenations contribute zero.
  AlgebraElement mul(const AlgebraElement& o) const;
  AlgebraElement mul_left(const Path& p) const;
  AlgebraElement mul_right(const Path& p) const;

  // All support paths share source and share target.
  bool is_uniform() const;
  // All support paths have equal length; degree() is that length.
  bool is_homogeneous() const;
  int degree() const;

  // Splits into nonzero uniform components v·x·w, in (source, target) order.
  std::vector<AlgebraElement> uniform_components() const;

  std::string str() const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  const Quiver* quiver_ = nullptr;
  Field field_ = Field::rationals();
  std::map<Path, Scalar> terms_;
};

}  // namespace pathalg

#endif
