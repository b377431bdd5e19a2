#include <doctest.h>

#include "helpers.hpp"
#include "mapcount/catalytic_kernel.hpp"
#include "mapcount/ising_catalytic.hpp"
#include "mapcount/map_oracle.hpp"

using namespace mapcount;
using namespace mapcount::test;

TEST_CASE("reference catalytic solver matches the oracle") {
  const auto sol = solve_catalytic_bicoloured(6);
  CHECK(sol.M11[0] == nu({1}));
  CHECK(sol.M11[1] == nu({1, 2}));
  CHECK(sol.M11[2] == nu({3, 8, 9}));
  const auto oracle = oracle_series(5, Weighting::parse("all"));
  CHECK(sol.M11.truncated(6) == oracle);
  // first coefficient in full: x y^2 (1 + nu) + x^2 y nu
  const auto& m1 = sol.M_xy[1];
  CHECK(m1 == CatalyticPoly::monomial(1, {1, 2, 0}) + CatalyticPoly::monomial(1, {1, 2, 1}) +
                  CatalyticPoly::monomial(1, {2, 1, 1}));
}

TEST_CASE("functional equation residual vanishes") {
  const auto sol = solve_catalytic_bicoloured(7);
  CHECK(catalytic_rhs(sol.M_xy) == sol.M_xy);
}

TEST_CASE("degree bounds of the catalytic coefficients") {
  const auto sol = solve_catalytic_bicoloured(8);
  for (std::size_t n = 1; n < 8; ++n) {
    CHECK(sol.M_xy[n].degree_x() <= 2 * n);
    CHECK(sol.M_xy[n].degree_y() <= 2 * n);
    CHECK(sol.M_xy[n].degree_nu() <= n);
  }
  CHECK(nu_degree_excess(sol.M11) <= 0);
}

TEST_CASE("all-monochromatic part is symmetric under vertex/face duality") {
  // nu^n z^n counts each map once, and duality swaps root vertex and root face
  const auto sol = solve_catalytic_bicoloured(7);
  for (std::size_t n = 1; n < 7; ++n) {
    for (const auto& [key, c] : sol.M_xy[n].terms()) {
      const auto e = CatalyticPoly::unpack(key);
      if (e.nu != n) continue;
      CHECK(sol.M_xy[n].coeff({e.y, e.x, e.nu}) == c);
    }
    CHECK(sol.dx[n].coeff(n) == sol.dy[n].coeff(n));
  }
}

TEST_CASE("multimodular kernel agrees with the exact reference") {
  const auto exact = solve_catalytic_bicoloured(9);
  const auto fast = solve_catalytic_multimodular(9);
  CHECK(fast.M11 == exact.M11);
  CHECK(fast.dy == exact.dy);
  CHECK(fast.dx == exact.dx);
}

TEST_CASE("interpolation modulo a prime") {
  PrimeScope scope(kernel_primes(1)[0]);
  // 3 + 2v + 5v^3 at v = 0..3
  const std::vector<std::uint32_t> pts{0, 1, 2, 3};
  std::vector<std::uint32_t> vals;
  for (auto v : pts) vals.push_back(3 + 2 * v + 5 * v * v * v);
  CHECK(interpolate_mod(pts, vals) == std::vector<std::uint32_t>{3, 2, 0, 5});
}

TEST_CASE("root edge split") {
  const auto sol = solve_catalytic_bicoloured(7);
  const auto split = split_by_root_edge(sol);
  CHECK(split.bi[1] == nu({1}));
  CHECK(split.mono[1] == nu({0, 2}));
  CHECK(split.del[1] == nu({3}));
  CHECK_FALSE(split.bi_equals_del);
  CHECK(split.total == NuSeries::one(7) + split.mono + split.bi);
  // against the oracle's colouring-based weightings
  CHECK(split.bi.truncated(6) == oracle_series(5, Weighting::parse("bi_root")));
  CHECK(split.mono.truncated(6) == oracle_series(5, Weighting::parse("mono_root")));
  CHECK(split.del.truncated(6) == oracle_series(5, Weighting::parse("del")));
  CHECK(split.con.truncated(6) == oracle_series(5, Weighting::parse("con")));
  // deletion identity at x = y = 1
  const auto z = NuSeries::var(7);
  CHECK(split.del == z * sol.M11 * sol.M11 * PolyNu(2) + z * sol.M11 + z * sol.dy);
}

TEST_CASE("bichromatic series at nu = 0 is the bipartite series") {
  const auto sol = solve_catalytic_multimodular(12);
  const auto split = split_by_root_edge(sol);
  const auto mb = bipartite_closed_form(12);
  const auto b0 = at_nu(split.bi, 0);
  CHECK(b0[0] == 0);
  for (std::size_t n = 1; n < 12; ++n) CHECK(b0[n] == mb[n]);
  CHECK(mb[1] == 1);
  CHECK(mb[2] == 3);
  CHECK(mb[3] == 12);
  CHECK(mb[4] == 56);
  for (std::size_t n = 0; n < 12; ++n) {
    CHECK(b0[n].is_integer());
    CHECK(b0[n].sign() >= 0);
    CHECK(split.mono[n].checked_unshift(1).has_value());
  }
}

TEST_CASE("rational parametrisation") {
  const auto S = parametrisation_S(6);
  CHECK(S[0].is_zero());
  CHECK(S[1] == nu({1}));
  const auto M = parametrisation_M(6);
  CHECK(M[1] == nu({1, 2}));
  CHECK(M[2] == nu({3, 8, 9}));
  const auto sol = solve_catalytic_bicoloured(8);
  CHECK_NOTHROW(check_parametrisation(sol.M11));
  auto broken = sol.M11;
  broken[5] += nu({1});
  CHECK_THROWS_AS(check_parametrisation(broken), MismatchAt);
  // at nu = 1 each map is weighted by its 2^(V-1) colourings
  const auto m1 = at_nu(M, 1);
  const auto oracle = oracle_series(5, Weighting::parse("all"));
  for (std::size_t n = 0; n <= 5; ++n) CHECK(m1[n] == oracle[n](BigRational(1)));
}

TEST_CASE("uncoloured catalytic equation") {
  const auto M = solve_catalytic_uncoloured(31);
  CHECK(M[0] == 1);
  CHECK(M[1] == 2);
  CHECK(M[2] == 9);
  CHECK(M[3] == 54);
  CHECK(M[6] == 24057);
  CHECK(M == maps_closed_form(31));
  for (unsigned n = 0; n < 31; ++n) CHECK(M[n] == BigRational(maps_count(n)));
}
