#pragma once

#include <algorithm>
#include <string>

#include "mapcount/big_rational.hpp"
#include "mapcount/poly.hpp"

namespace mapcount {

/// Closed interval with exact rational endpoints; arithmetic encloses every
/// possible result.
struct Interval {
  BigRational lo, hi;

  Interval() = default;
  Interval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {}
  static Interval point(const BigRational& v) { return {v, v}; }

  BigRational width() const { return hi - lo; }
  BigRational mid() const { return (lo + hi) / BigRational(2); }
  bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// Whether `inner` lies in the interior of this interval.
  bool strictly_contains(const Interval& inner) const { return lo < inner.lo && inner.hi < hi; }
  bool operator==(const Interval&) const = default;

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  Interval operator-() const { return {-hi, -lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const BigRational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  /// Throws DivisionError if the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionError("interval division by an interval containing zero");
    return a * Interval(BigRational(1) / b.hi, BigRational(1) / b.lo);
  }

  /// "[lo, hi]" with decimals to the given number of digits (lo rounded down, hi up).
  std::string to_decimal(int digits) const;
};

Interval intersect(const Interval& a, const Interval& b);
/// Horner evaluation in interval arithmetic.
Interval eval(const QPoly& p, const Interval& x);

}  // namespace mapcount
