#include <doctest.h>

#include "helpers.hpp"
#include "mapcount/connectivity_tower.hpp"
#include "mapcount/map_oracle.hpp"

using namespace mapcount;
using namespace mapcount::test;

namespace {

// number of maps of the class with n edges: each map has one all-black colouring
BigRational oracle_count(const NuSeries& s, std::size_t n) { return s[n].coeff(n); }

const std::map<std::size_t, long> kTb = {{12, 1},  {13, 0},  {14, 0},   {15, 0},   {16, 4},   {17, 0},  {18, 9},
                                         {19, 19}, {20, 29}, {21, 63}, {22, 198}, {23, 345}, {24, 685}, {25, 1775}};

}  // namespace

TEST_CASE("uncoloured tower against the oracle") {
  const auto t = build_uncoloured_tower(solve_catalytic_uncoloured(14));
  const auto two = oracle_series(6, Weighting::parse("two_conn"));
  const auto three = oracle_series(6, Weighting::parse("three_conn"));
  CHECK(t.B[0].is_zero());
  CHECK(t.B[1].is_zero());
  for (std::size_t n = 2; n <= 6; ++n) CHECK(t.B[n] == oracle_count(two, n));
  CHECK(t.B[2] == BigRational(1));  // the double edge
  // T counts by edges other than the root edge
  for (std::size_t n = 0; n < 5; ++n) CHECK(t.T[n].is_zero());
  CHECK(t.T[5] == oracle_count(three, 6));
  CHECK(t.T[5] == BigRational(1));  // K4
  CHECK(t.T.truncated(11) == qs({0, 0, 0, 0, 0, 1, 0, 4, 6, 24, 66}));
}

TEST_CASE("uncoloured tower identities") {
  const auto t = build_uncoloured_tower(solve_catalytic_uncoloured(20));
  const std::size_t n = t.D.order();
  CHECK(t.S == t.P);
  CHECK(t.S == t.D * (t.D - t.S));
  CHECK(compose(t.f, t.D) == QSeries::var(n));
  // M = 1 + 2zM^2 + B(zM^2)
  const QSeries z = QSeries::var(t.M.order());
  const QSeries h = z * t.M * t.M;
  CHECK(QSeries::one(t.M.order()) + h * BigRational(2) + compose(t.B, h) == t.M);
  for (const auto& c : t.B.coeffs()) CHECK((c.sign() >= 0 && c.is_integer()));
  for (const auto& c : t.T.coeffs()) CHECK((c.sign() >= 0 && c.is_integer()));
  CHECK(t.T.truncated(14) == build_uncoloured_tower(maps_closed_form(20)).T.truncated(14));
}

TEST_CASE("core substitution needs a unit constant term") {
  CHECK_THROWS_AS(two_connected_from_maps(qs({0, 1, 2})), ValuationError);
}

TEST_CASE("bicoloured 2-connected series against the oracle") {
  const auto split = split_by_root_edge(solve_catalytic_bicoloured(8));
  const auto [B1, B2] = build_bicoloured_two_connected(split);
  const auto o1 = oracle_series(5, Weighting::parse("two_conn+mono_root"));
  const auto o2 = oracle_series(5, Weighting::parse("two_conn+bi_root"));
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(B1[n] == o1[n]);
    CHECK(B2[n] == o2[n]);
  }
  for (std::size_t n = 0; n < B1.order(); ++n) CHECK(B1[n].coeff(0).is_zero());
  CHECK(nu_degree_excess(B1) <= 0);
  CHECK(nu_degree_excess(B2) <= 0);
  // at nu = 1 both roots together give the uncoloured 2-connected maps weighted by colourings
  const auto t = build_uncoloured_tower(solve_catalytic_uncoloured(8));
  for (std::size_t n = 2; n < 8; ++n) CHECK((B1[n] + B2[n]).coeff(n) == t.B[n]);
}

TEST_CASE("bipartite 2-connected series from the two routes") {
  const auto split = split_by_root_edge(solve_catalytic_bicoloured(14));
  const auto [B1, B2] = build_bicoloured_two_connected(split);
  const auto bb = bipartite_two_connected(bipartite_closed_form(14));
  CHECK(at_nu(B2, 0) == bb);
  CHECK(bb.truncated(12) == qs({0, 0, 1, 1, 2, 6, 19, 64, 230, 865, 3364, 13443}));
  // a proper colouring with a black root exists exactly for bipartite maps
  const auto oracle = oracle_series(6, Weighting::parse("two_conn"));
  for (std::size_t n = 2; n <= 6; ++n) CHECK(bb[n] == oracle[n].coeff(0));
}

TEST_CASE("bicoloured 3-connected base case and normalizations") {
  const auto split = split_by_root_edge(solve_catalytic_bicoloured(9));
  const auto [B1, B2] = build_bicoloured_two_connected(split);
  const auto o1 = oracle_series(6, Weighting::parse("three_conn+mono_root"));
  const auto o2 = oracle_series(6, Weighting::parse("three_conn+bi_root"));
  const auto t = build_bicoloured_three_connected(B1, B2, Normalization::RootNetwork);
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(t.T1[n].is_zero());
    CHECK(t.T2[n].is_zero());
  }
  CHECK(t.T1[6] == o1[6]);
  CHECK(t.T2[6] == o2[6]);
  CHECK(t.T1[6] == nu({0, 0, 1, 2, 0, 0, 1}));
  const auto bare = build_bicoloured_three_connected(B1, B2, Normalization::Bare);
  CHECK(!bare.T1[5].is_zero());
  const auto first = build_bicoloured_three_connected(B1, B2, Normalization::FirstArgument);
  CHECK(!(first.T1[6] == o1[6]));
  CHECK(first.T2[6] == o2[6]);
}

TEST_CASE("series networks: triangular solve equals Cramer's rule") {
  const auto split = split_by_root_edge(solve_catalytic_bicoloured(9));
  const auto [B1, B2] = build_bicoloured_two_connected(split);
  const auto t = build_bicoloured_three_connected(B1, B2, Normalization::RootNetwork);
  const auto [S1, S2] = series_networks_cramer(t.D1, t.D2);
  CHECK(S1 == t.S1);
  CHECK(S2 == t.S2);
  CHECK(nu_degree_excess(t.T1) <= 0);
  CHECK(nu_degree_excess(t.T2) <= 0);
}

TEST_CASE("nu must divide the monochromatic 2-connected series") {
  NuSeries b1 = nus({nu({}), nu({}), nu({1}), nu({0, 1})});
  NuSeries b2 = nus({nu({}), nu({}), nu({1}), nu({1})});
  CHECK_THROWS_AS(build_bicoloured_three_connected(b1, b2, Normalization::RootNetwork), DivisibilityError);
}

TEST_CASE("fast pipeline agrees with the exact tower") {
  const auto split = split_by_root_edge(solve_catalytic_bicoloured(12));
  const auto [B1, B2] = build_bicoloured_two_connected(split);
  const auto exact = build_bicoloured_three_connected(B1, B2, Normalization::RootNetwork);
  const auto fast = bicoloured_pipeline_multimodular(10, Normalization::RootNetwork);
  CHECK(fast.split.total == split.total.truncated(12));
  CHECK(fast.B1 == B1);
  CHECK(fast.B2 == B2);
  CHECK(fast.T1 == exact.T1.truncated(10));
  CHECK(fast.T2 == exact.T2.truncated(10));
}

TEST_CASE("T_b coefficients and order independence") {
  const auto a = bicoloured_pipeline_multimodular(27, Normalization::RootNetwork);
  for (const auto& [n, v] : kTb) CHECK(a.Tb[n] == BigRational(v));
  for (std::size_t n = 0; n < 12; ++n) CHECK(a.Tb[n].is_zero());
  const auto b = bicoloured_pipeline_multimodular(30, Normalization::RootNetwork);
  CHECK(b.Tb.truncated(27) == a.Tb);
  CHECK(b.T1.truncated(27) == a.T1);
  for (const auto& c : b.Tb.coeffs()) CHECK((c.sign() >= 0 && c.is_integer()));
  for (const auto& s : {b.T1, b.T2, b.B1, b.B2}) {
    CHECK(nu_degree_excess(s) <= 0);
    for (const int v : {0, 1}) {
      const QSeries q = at_nu(s, v);
      for (const auto& c : q.coeffs()) CHECK((c.sign() >= 0 && c.is_integer()));
    }
  }
}

TEST_CASE("normalization evidence singles out the root network") {
  const auto split = split_by_root_edge(solve_catalytic_bicoloured(8));
  const auto o1 = oracle_series(6, Weighting::parse("three_conn+mono_root"));
  const auto o2 = oracle_series(6, Weighting::parse("three_conn+bi_root"));
  const auto ev = compare_normalizations(split, o1[6], o2[6], kTb, 26);
  REQUIRE(ev.size() == 3);
  for (const auto& e : ev) {
    const bool ok = e.matches_base_case && e.matches_table && e.vanishes_below_six;
    CHECK(ok == (e.norm == Normalization::RootNetwork));
  }
  CHECK(parse_normalization("root_network") == Normalization::RootNetwork);
  CHECK_THROWS_AS(parse_normalization("nope"), ParseError);
}
