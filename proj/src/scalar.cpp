#include "pathalg/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pathalg {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return acc;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorCode::kInvalidArgument, "division by zero in F_p");
  return powmod_u64(a, p - 2, p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    fail(ErrorCode::kParse, "field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::kPrime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "rational") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(text.substr(3));
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "bad field descriptor: " + text);
    }
    return prime(p);
  }
  fail(ErrorCode::kParse, "bad field descriptor: " + text);
}

std::string Field::str() const {
  if (kind_ == Kind::kRational) return "rational";
  return "fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field&) { return Scalar(); }

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long n) {
  Scalar s;
  if (f.kind() == Field::Kind::kRational) {
    s.q = n;
  } else {
    long long m = n % static_cast<long long>(f.characteristic());
    if (m < 0) m += static_cast<long long>(f.characteristic());
    s.r = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) fail(ErrorCode::kParse, "empty coefficient");
  bool neg = text[0] == '-';
  std::string body = neg ? text.substr(1) : text;
  auto slash = body.find('/');
  std::string num = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (num.empty() || den.empty() ||
      num.find_first_not_of("0123456789") != std::string::npos ||
      den.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::kParse, "bad coefficient: " + text);
  BigInt n(num), d(den);
  if (d == 0) fail(ErrorCode::kParse, "zero denominator: " + text);
  Scalar s;
  if (f.kind() == Field::Kind::kRational) {
    s.q = BigRational(n, d);
    if (neg) s.q = -s.q;
    return s;
  }
  BigInt p(f.characteristic());
  std::uint64_t nn = static_cast<std::uint64_t>(n % p);
  std::uint64_t dd = static_cast<std::uint64_t>(d % p);
  if (dd == 0) fail(ErrorCode::kParse, "denominator vanishes in " + f.str());
  s.r = mulmod_u64(nn, invmod_u64(dd, f.characteristic()), f.characteristic());
  if (neg && s.r != 0) s.r = f.characteristic() - s.r;
  return s;
}

bool Scalar::is_zero() const { return q == 0 && r == 0; }

bool Scalar::is_one(const Field& f) const {
  return f.kind() == Field::Kind::kRational ? q == 1 : r == 1;
}

std::string Scalar::str() const {
  if (r != 0) return std::to_string(r);
  if (q == 0) return "0";
  return q.str();
}

Scalar Scalar::add(const Field& f, const Scalar& o) const {
  Scalar s;
  if (f.kind() == Field::Kind::kRational)
    s.q = q + o.q;
  else
    s.r = (r + o.r) % f.characteristic();
  return s;
}

Scalar Scalar::sub(const Field& f, const Scalar& o) const {
  return add(f, o.neg(f));
}

Scalar Scalar::mul(const Field& f, const Scalar& o) const {
  Scalar s;
  if (f.kind() == Field::Kind::kRational)
    s.q = q * o.q;
  else
    s.r = mulmod_u64(r, o.r, f.characteristic());
  return s;
}

Scalar Scalar::div(const Field& f, const Scalar& o) const {
  return mul(f, o.inv(f));
}

Scalar Scalar::neg(const Field& f) const {
  Scalar s;
  if (f.kind() == Field::Kind::kRational)
    s.q = -q;
  else
    s.r = r == 0 ? 0 : f.characteristic() - r;
  return s;
}

Scalar Scalar::inv(const Field& f) const {
  Scalar s;
  if (f.kind() == Field::Kind::kRational) {
    if (q == 0) fail(ErrorCode::kInvalidArgument, "division by zero");
    s.q = 1 / q;
  } else {
    s.r = invmod_u64(r, f.characteristic());
  }
  return s;
}

}  // namespace pathalg
