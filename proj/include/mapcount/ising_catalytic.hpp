#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mapcount/catalytic_poly.hpp"
#include "mapcount/poly.hpp"
#include "mapcount/trunc_series.hpp"

namespace mapcount {

using QSeries = TruncSeries<BigRational>;
using NuSeries = TruncSeries<PolyNu>;

/// Bicoloured maps counted by edges (z), monochromatic edges (nu), root vertex
/// degree (x) and root face degree (y). M_xy is only filled by the reference
/// solver; the slices are always present.
struct CatalyticSolution {
  TruncSeries<CatalyticPoly> M_xy;
  NuSeries M11;  // M(1,1)
  NuSeries dy;   // d/dy M(1,y) at y = 1
  NuSeries dx;   // d/dx M(x,1) at x = 1
};

/// Exact order-by-order solution of the two-catalytic-variable equation:
/// coefficient n is computed from coefficients below n.
CatalyticSolution solve_catalytic_bicoloured(std::size_t order);

/// Right-hand side of the functional equation applied to a candidate M.
TruncSeries<CatalyticPoly> catalytic_rhs(const TruncSeries<CatalyticPoly>& M);

/// Series by root edge: total = M(1,1), del and con are the deletion and
/// contraction series at x = y = 1, bi = del - con, mono = nu*con.
struct IsingSplit {
  NuSeries total, mono, bi, del, con;
  /// Whether bi coincides with del (the one-line claim that the bichromatic
  /// series equals the deletion series).
  bool bi_equals_del = false;
};

/// Builds the split from the slices; throws ConsistencyFailure unless
/// total = 1 + mono + bi holds exactly and mono is divisible by nu.
IsingSplit split_by_root_edge(const CatalyticSolution& sol);

/// S solving S = z (1 + 3nuS - 3nuS^2 - nu^2S^3)^2 / (1 - 2S + 2nu^2S^3 - nu^2S^4).
NuSeries parametrisation_S(std::size_t order);
/// M(z, nu) from the rational parametrisation in S.
NuSeries parametrisation_M(std::size_t order);
/// Throws MismatchAt naming the first order where M11 and the parametrisation differ.
void check_parametrisation(const NuSeries& M11);

/// Uncoloured maps from M(z,y) = 1 + y^2 z M^2 + y z (y M - M(z,1))/(y - 1), at y = 1.
QSeries solve_catalytic_uncoloured(std::size_t order);

/// Expansion of (1 - c z)^{3/2}.
QSeries three_halves_power(const BigRational& c, std::size_t order);
/// (18z - 1 + (1 - 12z)^{3/2}) / (54 z^2)
QSeries maps_closed_form(std::size_t order);
/// (-1 + 12z - 24z^2 + (1 - 8z)^{3/2}) / (32 z^2), non-empty bipartite maps.
QSeries bipartite_closed_form(std::size_t order);
/// 2 * 3^n binom(2n, n) / ((n+1)(n+2))
mpz_class maps_count(unsigned n);

/// Substitutes a rational value for nu in every coefficient.
QSeries at_nu(const NuSeries& s, const BigRational& v);
/// Lifts a rational series to constant polynomials in nu.
NuSeries lift_nu(const QSeries& s);
/// Largest nu-degree minus n over the coefficients; <= 0 means deg_nu [z^n] <= n.
int nu_degree_excess(const NuSeries& s);

}  // namespace mapcount
