// Exact coefficient arithmetic: arbitrary-precision rationals or a prime
// field F_p, fixed per session. No floating point anywhere.
#ifndef PATHALG_SCALAR_HPP
#define PATHALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "pathalg/error.hpp"

namespace pathalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Field {
 public:
  enum class Kind { kRational, kPrime };

  static Field rationals() { return Field(Kind::kRational, 0); }
  static Field prime(std::uint64_t p);
  // "rational" or "fp:P"
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  std::string str() const;
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

// A field element. Rational values live in `q`, prime-field values in
// `r` (always reduced to [0, p)). Operations take the session field.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long n);
  // Decimal string; rationals also accept "num/den".
  static Scalar parse(const Field& f, const std::string& text);

  bool is_zero() const;
  bool is_one(const Field& f) const;
  std::string str() const;

  Scalar add(const Field& f, const Scalar& o) const;
  Scalar sub(const Field& f, const Scalar& o) const;
  Scalar mul(const Field& f, const Scalar& o) const;
  Scalar div(const Field& f, const Scalar& o) const;
  Scalar neg(const Field& f) const;
  Scalar inv(const Field& f) const;

  bool operator==(const Scalar& o) const { return q == o.q && r == o.r; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  BigRational q;
  std::uint64_t r = 0;

 private:
  bool rational_ = true;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace pathalg

#endif
