#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "mapcount/algebraic_asymptotics.hpp"
#include "mapcount/connectivity_tower.hpp"

using namespace mapcount;
using namespace mapcount::test;

namespace {

QPoly qp(const std::vector<long>& c) { return QPoly(std::vector<BigRational>(c.begin(), c.end())); }

AlgebraicCurve curve(const std::vector<std::vector<long>>& rows) {
  AlgebraicCurve c;
  for (const auto& r : rows) c.p.push_back(qp(r));
  return c;
}

const BigRational kTiny(1, 1000000000);

}  // namespace

TEST_CASE("guessing recovers the curves of the map series") {
  const QSeries M = maps_closed_form(50);
  const QSeries Mb = bipartite_closed_form(50);
  const auto cM = guess_min_poly(M, 4, 6);
  CHECK(cM == curve({{-1, 16}, {1, -18}, {0, 0, 27}}));
  const QSeries res = cM.residual(M);
  for (const auto& r : res.coeffs()) CHECK(r.is_zero());
  CHECK(guess_min_poly(Mb, 4, 6) == curve({{0, -1, 9}, {1, -12, 24}, {0, 0, 16}}));
  const auto t = build_uncoloured_tower(M);
  CHECK(guess_min_poly(t.B, 5, 8).degree_T() == 3);
  CHECK(guess_min_poly(t.T, 5, 8).degree_T() == 2);
}

TEST_CASE("guessing the bipartite 2-connected series needs degree five") {
  const QSeries bb = bipartite_two_connected(bipartite_closed_form(70));
  const auto c = guess_min_poly(bb, 6, 12, 20);
  CHECK(c == curve({{0, 0, -1, 5, 8, 1}, {1, -6, -8, 12, 5}, {4, -7, 4, 10}, {6, 4, 10}, {4, 5}, {1}}));
  CHECK_THROWS_AS(guess_min_poly(bb, 4, 6, 10), NotFound);
}

TEST_CASE("guessing failures") {
  std::vector<BigRational> e;
  BigRational f(1);
  for (long n = 0; n < 40; ++n) {
    e.push_back(BigRational(1) / f);
    f *= BigRational(n + 1);
  }
  CHECK_THROWS_AS(guess_min_poly(QSeries(e), 2, 3), NotFound);
  CHECK_THROWS_AS(guess_min_poly(maps_closed_form(8), 2, 4), InsufficientData);
}

TEST_CASE("curve JSON round trip") {
  const auto c = curve({{-1, 16}, {1, -18}, {0, 0, 27}});
  CHECK(curve_from_json(curve_to_json(c)) == c);
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"degT": 3, "p": [[1], [2]]})")), ParseError);
}

TEST_CASE("resultants and discriminants") {
  // 4z up to content
  CHECK(discriminant_z(curve({{0, -1}, {0}, {1}})) == qp({0, 1}));
  CHECK(determinant({{BigRational(2), BigRational(1)}, {BigRational(1), BigRational(1)}}) == BigRational(1));
  // T - z and T - 2: the resultant vanishes at z = 2
  CHECK(resultant_T(curve({{0, -1}, {1}}), curve({{-2}, {1}}))(BigRational(2)).is_zero());
  const auto dm = discriminant_z(curve({{-1, 16}, {1, -18}, {0, 0, 27}}));
  CHECK(dm(BigRational(1, 12)).is_zero());
  const auto db = discriminant_z(curve({{0, -1, 9}, {1, -12, 24}, {0, 0, 16}}));
  CHECK(db(BigRational(1, 8)).is_zero());
}

TEST_CASE("Sturm root isolation") {
  const QPoly p = qp({-2, 0, 1});
  CHECK(count_real_roots(p, BigRational(-2), BigRational(2)) == 2);
  CHECK(count_real_roots(p, BigRational(0), BigRational(1)) + count_real_roots(p, BigRational(1), BigRational(2)) ==
        count_real_roots(p, BigRational(0), BigRational(2)));
  auto roots = isolate_real_roots(p, BigRational(0), BigRational(2));
  REQUIRE(roots.size() == 1);
  roots[0].refine(kTiny);
  CHECK(roots[0].hi - roots[0].lo <= kTiny);
  CHECK(roots[0].lo * roots[0].lo < BigRational(2));
  CHECK(roots[0].hi * roots[0].hi > BigRational(2));
  CHECK(!roots[0].as_rational());
  CHECK(std::abs(roots[0].approx() - std::sqrt(2.0)) < 1e-9);

  const auto half = isolate_real_roots(qp({-1, 0, 4}), BigRational(0), BigRational(1));
  REQUIRE(half.size() == 1);
  REQUIRE(half[0].as_rational());
  CHECK(*half[0].as_rational() == BigRational(1, 2));
  // roots at 1, 2, 3 in (1, 3]
  CHECK(isolate_real_roots(qp({-6, 11, -6, 1}), BigRational(1), BigRational(3)).size() == 2);
}

TEST_CASE("simplest rational") {
  CHECK(simplest_rational(BigRational(3, 10), BigRational(4, 10)) == BigRational(1, 3));
  CHECK(simplest_rational(BigRational(1, 13), BigRational(2, 23)) == BigRational(1, 12));
  CHECK(simplest_rational(BigRational(7, 2), BigRational(7, 2)) == BigRational(7, 2));
  CHECK(simplest_rational(BigRational(1, 13), BigRational(1, 11)) == BigRational(1, 11));
}

TEST_CASE("Puiseux branches and transfer for maps") {
  const QSeries M = maps_closed_form(50);
  const auto e = puiseux_branch(curve({{-1, 16}, {1, -18}, {0, 0, 27}}), BigRational(1, 12), M);
  CHECK(e.coefficient(BigRational(0)) == BigRational(4, 3));
  CHECK(e.coefficient(BigRational(1)) == BigRational(-4, 3));
  CHECK(e.coefficient(BigRational(1, 2)).is_zero());
  REQUIRE(e.dominant_singular_term());
  CHECK(e.dominant_singular_term()->exponent == BigRational(3, 2));
  CHECK(e.dominant_singular_term()->coeff == BigRational(8, 3));
  const auto a = transfer(e);
  CHECK(a.over_sqrt_pi);
  CHECK(a.constant == BigRational(2));
  CHECK(a.n_exponent() == BigRational(-5, 2));
  CHECK(a.growth() == BigRational(12));

  const QSeries Mb = bipartite_closed_form(50);
  const auto b = transfer(puiseux_branch(curve({{0, -1, 9}, {1, -12, 24}, {0, 0, 16}}), BigRational(1, 8), Mb));
  CHECK(b.constant == BigRational(3, 2));
  CHECK(b.growth() == BigRational(8));
  // the asymptotic form is close to the coefficients
  const double n = 49, approx = b.constant_value() * std::pow(n, -2.5) * std::pow(8.0, n);
  CHECK(std::abs(Mb[49].to_double() / approx - 1) < 0.1);
}

TEST_CASE("Puiseux branches with an irrational singular coefficient") {
  const QSeries bb = bipartite_two_connected(bipartite_closed_form(70));
  const auto c = curve({{0, 0, -1, 5, 8, 1}, {1, -6, -8, 12, 5}, {4, -7, 4, 10}, {6, 4, 10}, {4, 5}, {1}});
  const auto a = transfer(puiseux_branch(c, BigRational(25, 128), bb));
  CHECK(a.growth() == BigRational(128, 25));
  CHECK(a.radicand == BigRational(65));
  CHECK(a.constant == BigRational(75, 4394));
  CHECK(a.over_sqrt_pi);
}

TEST_CASE("transfer theorem constants") {
  const auto pole = transfer(BigRational(1), BigRational(-1), BigRational(1));
  CHECK(!pole.over_sqrt_pi);
  CHECK(pole.constant == BigRational(1));
  CHECK(pole.n_exponent().is_zero());
  const auto sq = transfer(BigRational(1), BigRational(1, 2), BigRational(1, 4));
  CHECK(sq.over_sqrt_pi);
  CHECK(sq.constant == BigRational(-1, 2));
  CHECK(sq.growth() == BigRational(4));
  const auto t3 = transfer(BigRational::from_decimal("0.0040451"), BigRational(3, 2), BigRational(1));
  CHECK(std::abs(t3.constant_value() - 0.0017116) < 1e-7);
  CHECK_THROWS_AS(transfer(BigRational(1), BigRational(2), BigRational(1)), UnsupportedExponent);
  CHECK_THROWS_AS(transfer(BigRational(1), BigRational(1, 3), BigRational(1)), UnsupportedExponent);
}

TEST_CASE("growth estimates from ratios") {
  const auto g = growth_from_coefficients(maps_closed_form(80));
  CHECK(std::abs(g.estimate / 12 - 1) < 0.005);
  CHECK(g.used > 0);
  const auto gb = growth_from_coefficients(bipartite_closed_form(80));
  CHECK(std::abs(gb.estimate / 8 - 1) < 0.005);
  CHECK_THROWS_AS(growth_from_coefficients(maps_closed_form(20)), InsufficientData);
}

TEST_CASE("dominant singularities of the 2- and 3-connected series") {
  const auto t = build_uncoloured_tower(maps_closed_form(70));
  const auto dB = dominant_singularity(guess_min_poly(t.B, 5, 8), t.B, kTiny);
  REQUIRE(dB.exact);
  CHECK(*dB.exact == BigRational(4, 27));
  CHECK(dB.growth.contains(BigRational(27, 4)));
  const auto dT = dominant_singularity(guess_min_poly(t.T, 5, 8), t.T, kTiny);
  REQUIRE(dT.exact);
  CHECK(*dT.exact == BigRational(1, 4));
  const auto bt = transfer(puiseux_branch(guess_min_poly(t.T, 5, 8), BigRational(1, 4), t.T));
  CHECK(bt.constant == BigRational(8, 243));

  const QSeries bb = bipartite_two_connected(bipartite_closed_form(70));
  const auto c = curve({{0, 0, -1, 5, 8, 1}, {1, -6, -8, 12, 5}, {4, -7, 4, 10}, {6, 4, 10}, {4, 5}, {1}});
  const auto d = dominant_singularity(c, bb, kTiny);
  REQUIRE(d.exact);
  CHECK(*d.exact == BigRational(25, 128));
  CHECK(std::abs(d.estimate.estimate / 5.12 - 1) < 0.01);
}

TEST_CASE("series branches from a curve") {
  const auto cM = curve({{-1, 16}, {1, -18}, {0, 0, 27}});
  CHECK(simple_rational_roots_at_origin(cM) == std::vector<BigRational>{BigRational(1)});
  CHECK(series_from_curve(cM, BigRational(1), 30) == maps_closed_form(30));
  const auto cB = curve({{0, 0, -1, 8}, {1, -10, 12}, {2, 6}, {1}});
  CHECK(simple_rational_roots_at_origin(cB) == std::vector<BigRational>{BigRational(0)});
  const auto t = build_uncoloured_tower(maps_closed_form(30));
  const QSeries b = series_from_curve(cB, BigRational(0), 20);
  CHECK(b == t.B.truncated(20));
  CHECK_THROWS_AS(series_from_curve(cB, BigRational(-1), 20), UnsupportedBranch);
}
