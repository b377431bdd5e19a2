#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "mapcount/algebraic_asymptotics.hpp"

namespace mapcount {

/// Bicubic maps and networks with the singular point of the network series.
struct BicubicState {
  QSeries Mb;       // rooted bicubic maps by half the number of vertices
  QSeries G;        // 3-connected ones, from Mb = G(z (1 + Mb)^3)
  QSeries G_check;  // same, by undetermined coefficients
  QSeries D_net;    // networks, F(x, D(x)) = 0
  BigRational tau, zeta, G_at_tau;  // zeta = radius of Mb, G(tau) = Mb(zeta)
  Interval sigma, D_at_sigma, delta;
  QPoly sigma_poly;         // eliminant in z, primitive
  bool matches_reference = false;
  IsolatedRoot smallest_root;  // of the reference polynomial on (0, 1)
  bool straddles_zero = false;  // reference polynomial changes sign across sigma
  BigRational network_partial_sum;  // D_net truncated sum at sigma.lo, a lower bound for D(sigma)
};

/// 125 z^6 + 750 z^4 - 4332 z^2 + 1000.
QPoly bicubic_reference_polynomial();

/// Runs the whole pipeline with series to the given order, refining sigma
/// to the given width. Throws NoRootInInterval if the singular system has no
/// admissible solution in (0, 1).
BicubicState bicubic_pipeline(std::size_t order, const BigRational& tau, const BigRational& width);

/// Two equations in two unknowns with interval extensions of the values and Jacobian.
struct System2 {
  std::function<std::array<Interval, 2>(const std::array<Interval, 2>&)> f;
  std::function<std::array<std::array<Interval, 2>, 2>(const std::array<Interval, 2>&)> jacobian;
};

/// Krawczyk iteration from a box believed to contain a root; returns a box of
/// width <= `width` containing the unique root of the initial box.
/// Throws NoRootInInterval if uniqueness cannot be certified.
std::array<Interval, 2> krawczyk_solve(const System2& s, std::array<Interval, 2> box, const BigRational& width);

}  // namespace mapcount
