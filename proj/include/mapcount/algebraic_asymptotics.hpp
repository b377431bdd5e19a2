#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mapcount/interval.hpp"
#include "mapcount/ising_catalytic.hpp"
#include "mapcount/series_json.hpp"

namespace mapcount {

/// P(z, T) = sum_i p[i](z) T^i with integer coefficients of content 1 and a
/// positive leading coefficient.
struct AlgebraicCurve {
  std::vector<QPoly> p;

  std::size_t degree_T() const { return p.empty() ? 0 : p.size() - 1; }
  int degree_z() const;
  /// P(z0, T) as a polynomial in T.
  QPoly at_z(const BigRational& z0) const;
  /// P(z, s(z)) truncated to the order of s.
  QSeries residual(const QSeries& s) const;
  /// Content reduction and sign normalisation.
  AlgebraicCurve normalized() const;
  bool operator==(const AlgebraicCurve&) const = default;
};

Json curve_to_json(const AlgebraicCurve& c);
/// Parses {"degT": K, "p": [[c0, c1, ...], ...]}.
AlgebraicCurve curve_from_json(const Json& j);

/// Smallest curve (by degree in T, then in z) annihilating the series, found
/// from an exact nullspace. Equations for z^n with n < order - verify are used
/// to solve and all orders are checked afterwards. Throws NotFound,
/// AmbiguousKernel or InsufficientData.
AlgebraicCurve guess_min_poly(const QSeries& s, std::size_t degT_max, std::size_t degZ_max,
                              std::size_t verify = 10);

/// Determinant over Q by Gaussian elimination.
BigRational determinant(std::vector<std::vector<BigRational>> m);
/// Resultant in T of two curves (a polynomial in z) through the Sylvester
/// matrix, evaluated at sample points and interpolated.
QPoly resultant_T(const AlgebraicCurve& a, const AlgebraicCurve& b);
/// Primitive part of Res_T(P, dP/dT), so for T^2 - z this is z rather than 4z.
QPoly discriminant_z(const AlgebraicCurve& c);

/// A real root of `poly` known to be the only one in [lo, hi]
/// (lo == hi for a root found exactly).
struct IsolatedRoot {
  QPoly poly;
  BigRational lo, hi;

  bool is_exact() const { return lo == hi; }
  Interval interval() const { return {lo, hi}; }
  double approx() const { return ((lo + hi) / BigRational(2)).to_double(); }
  /// Bisects until hi - lo <= width.
  void refine(const BigRational& width);
  /// The root as a rational if it is one (checked exactly).
  std::optional<BigRational> as_rational() const;
};

/// Number of distinct real roots in (a, b] by Sturm's theorem.
std::size_t count_real_roots(const QPoly& p, const BigRational& a, const BigRational& b);
/// All real roots in (a, b], sorted, each isolated by Sturm counts.
std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p, const BigRational& a, const BigRational& b);

/// Expansion t0 + sum_k c_k (1 - z/rho)^{e_k}; each c_k is coeff * sqrt(radicand).
struct SingularTerm {
  BigRational exponent;
  BigRational coeff;
  BigRational radicand = 1;
  double value() const;
};
struct SingularExpansion {
  BigRational rho;
  std::vector<SingularTerm> terms;  // increasing exponents, first is exponent 0
  BigRational coefficient(const BigRational& exponent) const;
  /// Smallest non-integer exponent with a nonzero coefficient.
  std::optional<SingularTerm> dominant_singular_term() const;
};

/// Branch of the curve through the given series at a rational singular point
/// rho, in powers of (1 - z/rho)^{1/2} up to exponent max_half/2. The value at
/// rho must be rational; half-integer coefficients may carry one square root.
/// The branch is chosen by comparing candidates with truncated sums of the series.
/// Throws BranchSelectionAmbiguous or UnsupportedBranch.
SingularExpansion puiseux_branch(const AlgebraicCurve& c, const BigRational& rho, const QSeries& series,
                                 std::size_t max_half = 8);

/// [z^n] f ~ (c / Gamma(alpha)) n^{alpha - 1} r^n with r = 1/rho.
/// For half-integral alpha, Gamma(alpha) = g sqrt(pi) with g rational and the
/// constant is kept exactly as constant_over_sqrt_pi / sqrt(pi).
struct AsymptoticForm {
  BigRational c, alpha, rho;
  BigRational radicand = 1;  // c and constant carry a factor sqrt(radicand)
  bool over_sqrt_pi = false;
  BigRational constant;  // c / Gamma(alpha), without the 1/sqrt(pi) when over_sqrt_pi
  BigRational n_exponent() const { return alpha - BigRational(1); }
  BigRational growth() const { return BigRational(1) / rho; }
  double constant_value() const;
  std::string describe() const;
};
/// Throws UnsupportedExponent for alpha in {0, -1, -2, ...} or alpha not in (1/2)Z.
AsymptoticForm transfer(const BigRational& coeff, const BigRational& exponent, const BigRational& rho,
                        const BigRational& radicand = 1);
AsymptoticForm transfer(const SingularExpansion& e);

/// Heuristic (uncertified) growth estimate from a_n ~ c n^{-5/2} g^n:
/// g_n = (a_n / a_{n-1}) (n / (n-1))^{5/2} over the last `window` usable n.
struct GrowthEstimate {
  double estimate = 0, lo = 0, hi = 0;
  std::size_t used = 0;
};
GrowthEstimate growth_from_coefficients(const QSeries& s, std::size_t window = 10, double exponent = -2.5);

/// Radius of convergence of the series among the positive real roots of the
/// discriminant and leading coefficient in (0, 1), chosen as the candidate
/// closest to the ratio estimate and refined to the given width.
struct DominantSingularity {
  IsolatedRoot root;
  std::optional<BigRational> exact;
  Interval growth;  // 1/rho
  GrowthEstimate estimate;
  std::vector<IsolatedRoot> candidates;
};
DominantSingularity dominant_singularity(const AlgebraicCurve& c, const QSeries& s, const BigRational& width,
                                         const BigRational& lo = 0, const BigRational& hi = 1);

/// Power-series branch of the curve with T(0) = t0 by Newton iteration.
/// Throws UnsupportedBranch unless t0 is a simple root of P(0, T).
QSeries series_from_curve(const AlgebraicCurve& c, const BigRational& t0, std::size_t order);
/// The simple rational roots of P(0, T), smallest absolute value first.
std::vector<BigRational> simple_rational_roots_at_origin(const AlgebraicCurve& c);

/// Simplest rational (smallest denominator) in [lo, hi].
BigRational simplest_rational(const BigRational& lo, const BigRational& hi);

}  // namespace mapcount
