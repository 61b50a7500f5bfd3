#include "pathalg/element.hpp"

#include <sstream>

namespace pathalg {

AlgebraElement AlgebraElement::term(const Quiver& q, const Field& f,
                                    const Path& p, const Scalar& c) {
  AlgebraElement x(q, f);
  x.add_term(p, c);
  return x;
}

Scalar AlgebraElement::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second = it->second.add(field_, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::add(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c);
  return out;
}

AlgebraElement AlgebraElement::sub(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c.neg(field_));
  return out;
}

AlgebraElement AlgebraElement::scale(const Scalar& c) const {
  AlgebraElement out(*quiver_, field_);
  if (c.is_zero()) return out;
  for (const auto& [p, a] : terms_) out.add_term(p, a.mul(field_, c));
  return out;
}

AlgebraElement AlgebraElement::mul(const AlgebraElement& o) const {
  AlgebraElement out(*quiver_, field_);
  for (const auto& [p, a] : terms_) {
    for (const auto& [q, b] : o.terms_) {
      auto pq = try_compose(p, q);
      if (pq) out.add_term(*pq, a.mul(field_, b));
    }
  }
  return out;
}

AlgebraElement AlgebraElement::mul_left(const Path& p) const {
  AlgebraElement out(*quiver_, field_);
  for (const auto& [q, a] : terms_) {
    auto pq = try_compose(p, q);
    if (pq) out.add_term(*pq, a);
  }
  return out;
}

AlgebraElement AlgebraElement::mul_right(const Path& p) const {
  AlgebraElement out(*quiver_, field_);
  for (const auto& [q, a] : terms_) {
    auto qp = try_compose(q, p);
    if (qp) out.add_term(*qp, a);
  }
  return out;
}

bool AlgebraElement::is_uniform() const {
  if (terms_.empty()) return false;
  int src = terms_.begin()->first.source();
  int tgt = terms_.begin()->first.target();
  for (const auto& [p, c] : terms_)
    if (p.source() != src || p.target() != tgt) return false;
  return true;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int len = terms_.begin()->first.length();
  for (const auto& [p, c] : terms_)
    if (p.length() != len) return false;
  return true;
}

int AlgebraElement::degree() const {
  if (terms_.empty()) fail(ErrorCode::kZeroElement, "degree of zero element");
  if (!is_homogeneous())
    fail(ErrorCode::kInhomogeneousInput, "degree of inhomogeneous element");
  return terms_.begin()->first.length();
}

std::vector<AlgebraElement> AlgebraElement::uniform_components() const {
  std::map<std::pair<int, int>, AlgebraElement> buckets;
  for (const auto& [p, c] : terms_) {
    auto key = std::make_pair(p.source(), p.target());
    auto it = buckets.find(key);
    if (it == buckets.end())
      it = buckets.emplace(key, AlgebraElement(*quiver_, field_)).first;
    it->second.add_term(p, c);
  }
  std::vector<AlgebraElement> out;
  for (auto& [key, x] : buckets) out.push_back(std::move(x));
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "·" << p.str();
  }
  return os.str();
}

}  // namespace pathalg
