#pragma once

#include <optional>

#include "mapcount/poly.hpp"

namespace mapcount {

/// Quotient of two polynomials in nu, kept with coprime numerator and monic
/// denominator.
class RationalFunctionNu {
 public:
  RationalFunctionNu() : den_(1) {}
  template <std::integral I>
  RationalFunctionNu(I c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunctionNu(PolyNu num) : num_(std::move(num)), den_(1) {}
  RationalFunctionNu(PolyNu num, PolyNu den);

  const PolyNu& numerator() const { return num_; }
  const PolyNu& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// The polynomial value when the denominator is 1.
  std::optional<PolyNu> as_poly() const;
  BigRational operator()(const BigRational& nu) const;

  RationalFunctionNu operator-() const { return {-num_, den_}; }
  friend RationalFunctionNu operator+(const RationalFunctionNu& a, const RationalFunctionNu& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunctionNu operator-(const RationalFunctionNu& a, const RationalFunctionNu& b) {
    return a + (-b);
  }
  friend RationalFunctionNu operator*(const RationalFunctionNu& a, const RationalFunctionNu& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunctionNu operator/(const RationalFunctionNu& a, const RationalFunctionNu& b);
  RationalFunctionNu& operator+=(const RationalFunctionNu& o) { return *this = *this + o; }
  RationalFunctionNu& operator-=(const RationalFunctionNu& o) { return *this = *this - o; }
  RationalFunctionNu& operator*=(const RationalFunctionNu& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunctionNu& a, const RationalFunctionNu& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  PolyNu num_;
  PolyNu den_;
};

inline bool is_zero(const RationalFunctionNu& r) { return r.is_zero(); }
inline std::optional<RationalFunctionNu> unit_inverse(const RationalFunctionNu& r) {
  if (r.is_zero()) return std::nullopt;
  return RationalFunctionNu(r.denominator(), r.numerator());
}

}  // namespace mapcount
