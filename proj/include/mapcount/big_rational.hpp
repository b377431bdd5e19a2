#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "mapcount/errors.hpp"

namespace mapcount {

/// Arbitrary-precision rational in lowest terms (denominator > 0, zero is 0/1).
class BigRational {
 public:
  BigRational() = default;
  template <std::integral I>
  BigRational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = mpq_class(static_cast<long>(v));
    } else {
      q_ = mpq_class(static_cast<unsigned long>(v));
    }
  }
  explicit BigRational(const mpz_class& n) : q_(n) {}
  BigRational(const mpz_class& n, const mpz_class& d);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "a", "-a", "a/b" with optional sign; denominators must be nonzero.
  static BigRational parse(std::string_view text);
  /// Decimal literal such as "0.41501" or "-2.5e-3", converted exactly.
  static BigRational from_decimal(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// Always "a/b", including "n/1" for integers.
  std::string to_string() const;
  /// Fixed-point decimal with `digits` digits after the point (truncated toward zero).
  std::string to_decimal(int digits) const;

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

inline bool is_zero(const BigRational& r) { return r.is_zero(); }
inline std::optional<BigRational> unit_inverse(const BigRational& r) {
  if (r.is_zero()) return std::nullopt;
  return BigRational(1) / r;
}

BigRational pow(const BigRational& base, unsigned exponent);
BigRational abs(const BigRational& r);
/// Floor of a rational as a big integer.
mpz_class floor(const BigRational& r);

}  // namespace mapcount
