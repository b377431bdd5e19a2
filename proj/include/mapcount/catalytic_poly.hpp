#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "mapcount/big_rational.hpp"
#include "mapcount/poly.hpp"

namespace mapcount {

/// Sparse polynomial in x, y, nu with rational coefficients. Monomials are kept
/// sorted by packed exponent key and zero coefficients are never stored.
class CatalyticPoly {
 public:
  struct Exponent {
    std::uint32_t x = 0, y = 0, nu = 0;
    friend bool operator==(const Exponent&, const Exponent&) = default;
  };
  using Term = std::pair<std::uint64_t, BigRational>;

  CatalyticPoly() = default;
  template <std::integral I>
  CatalyticPoly(I c) : CatalyticPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit CatalyticPoly(const BigRational& c) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
  }
  static CatalyticPoly monomial(const BigRational& c, Exponent e);
  /// Lifts a polynomial in nu.
  static CatalyticPoly from_nu(const PolyNu& p);

  static std::uint64_t pack(Exponent e) {
    return (static_cast<std::uint64_t>(e.x) << 40) | (static_cast<std::uint64_t>(e.y) << 20) | e.nu;
  }
  static Exponent unpack(std::uint64_t k) {
    return {static_cast<std::uint32_t>(k >> 40), static_cast<std::uint32_t>((k >> 20) & 0xFFFFF),
            static_cast<std::uint32_t>(k & 0xFFFFF)};
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coeff(Exponent e) const;
  std::uint32_t degree_x() const;
  std::uint32_t degree_y() const;
  std::uint32_t degree_nu() const;

  CatalyticPoly operator-() const;
  CatalyticPoly& operator+=(const CatalyticPoly& o);
  CatalyticPoly& operator-=(const CatalyticPoly& o);
  CatalyticPoly& operator*=(const BigRational& s);
  friend CatalyticPoly operator+(CatalyticPoly a, const CatalyticPoly& b) { return a += b; }
  friend CatalyticPoly operator-(CatalyticPoly a, const CatalyticPoly& b) { return a -= b; }
  friend CatalyticPoly operator*(CatalyticPoly a, const BigRational& s) { return a *= s; }
  friend CatalyticPoly operator*(const CatalyticPoly& a, const CatalyticPoly& b);
  CatalyticPoly& operator*=(const CatalyticPoly& o) { return *this = *this * o; }
  friend bool operator==(const CatalyticPoly& a, const CatalyticPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplication by x^dx y^dy nu^dnu.
  CatalyticPoly shifted(Exponent by) const;
  /// Substitutes x = 1 (resp. y = 1).
  CatalyticPoly at_x1() const;
  CatalyticPoly at_y1() const;
  /// (f(x) - f(1)) / (x - 1), computed by synthetic division.
  CatalyticPoly divided_difference_x() const;
  CatalyticPoly divided_difference_y() const;
  /// d/dy at y = 1.
  CatalyticPoly dy_at_1() const;
  CatalyticPoly dx_at_1() const;
  /// Specializes x = y = 1 to a polynomial in nu.
  PolyNu at_xy1() const;
  /// Substitutes nu by a rational value.
  CatalyticPoly at_nu(const BigRational& v) const;

  friend std::ostream& operator<<(std::ostream& os, const CatalyticPoly& p);

 private:
  static CatalyticPoly from_unsorted(std::vector<Term> t);
  template <class Fn>
  CatalyticPoly transform(Fn&& fn) const;

  std::vector<Term> terms_;
};

inline bool is_zero(const CatalyticPoly& p) { return p.is_zero(); }
std::optional<CatalyticPoly> unit_inverse(const CatalyticPoly& p);

}  // namespace mapcount
