#include <doctest.h>

#include "helpers.hpp"
#include "mapcount/bicubic.hpp"

using namespace mapcount;
using namespace mapcount::test;

namespace {

using Box = std::array<Interval, 2>;

Interval pt(long v) { return Interval::point(BigRational(v)); }

// x^2 = 2, y = x
System2 sqrt_two() {
  System2 s;
  s.f = [](const Box& v) { return Box{v[0] * v[0] - pt(2), v[1] - v[0]}; };
  s.jacobian = [](const Box& v) { return std::array<Box, 2>{Box{pt(2) * v[0], pt(0)}, Box{pt(-1), pt(1)}}; };
  return s;
}

}  // namespace

TEST_CASE("interval arithmetic encloses the results") {
  const Interval a(BigRational(-1), BigRational(2)), b(BigRational(3), BigRational(4));
  CHECK(a + b == Interval(BigRational(2), BigRational(6)));
  CHECK(a - b == Interval(BigRational(-5), BigRational(-1)));
  CHECK(a * b == Interval(BigRational(-4), BigRational(8)));
  CHECK(a / b == Interval(BigRational(-1, 3), BigRational(2, 3)));
  CHECK_THROWS_AS(b / a, DivisionError);
  CHECK_THROWS_AS(intersect(a, Interval(BigRational(5), BigRational(6))), NoRootInInterval);
  CHECK(eval(QPoly(std::vector<BigRational>{-2, 0, 1}), b) == Interval(BigRational(7), BigRational(14)));
  CHECK(Interval(BigRational(1, 3), BigRational(2, 3)).to_decimal(3) == "[0.333, 0.667]");
}

TEST_CASE("Krawczyk certifies a simple root") {
  const Box start{Interval(BigRational(13, 10), BigRational(3, 2)), Interval(BigRational(13, 10), BigRational(3, 2))};
  const BigRational w(1, 1000000000);
  const Box r = krawczyk_solve(sqrt_two(), start, w);
  CHECK(r[0].width() <= w);
  CHECK(r[0].lo * r[0].lo < BigRational(2));
  CHECK(r[0].hi * r[0].hi > BigRational(2));
  const Box empty{Interval(BigRational(2), BigRational(3)), Interval(BigRational(2), BigRational(3))};
  CHECK_THROWS_AS(krawczyk_solve(sqrt_two(), empty, w), NoRootInInterval);
}

TEST_CASE("bicubic maps and their 3-connected cores") {
  const BigRational tau(125, 512);
  const BigRational width = BigRational::parse("1/1000000000000");
  const auto st = bicubic_pipeline(30, tau, width);
  CHECK(st.G == st.G_check);
  CHECK(st.G.truncated(12) == qs({0, 1, 0, 0, 1, 0, 3, 7, 15, 63, 168, 561}));
  CHECK(st.G_at_tau == BigRational(1, 4));
  CHECK(st.zeta == BigRational(1, 8));
  CHECK(st.D_net[8] == BigRational(1, 2));
  CHECK(st.D_net[10] == BigRational(1, 2));
  CHECK(st.D_net[12] == BigRational(2));
  for (std::size_t i = 1; i < st.D_net.order(); i += 2) CHECK(st.D_net[i].is_zero());
}

TEST_CASE("bicubic singular point") {
  const BigRational width = BigRational::parse("1/1000000000000");
  const auto st = bicubic_pipeline(30, BigRational(125, 512), width);
  CHECK(st.sigma.width() <= width);
  CHECK(st.sigma.lo > BigRational::from_decimal("0.491252326836"));
  CHECK(st.sigma.hi < BigRational::from_decimal("0.491252326837"));
  CHECK(st.delta.lo > BigRational::from_decimal("2.035613767856"));
  CHECK(st.delta.hi < BigRational::from_decimal("2.035613767857"));
  CHECK(st.D_at_sigma.lo > BigRational::from_decimal("0.0038687"));
  CHECK(st.D_at_sigma.hi < BigRational::from_decimal("0.0038688"));
  CHECK(st.matches_reference);
  CHECK(st.straddles_zero);
  CHECK(st.smallest_root.interval().lo <= st.sigma.hi);
  CHECK(st.sigma.lo <= st.smallest_root.interval().hi);
  CHECK(st.network_partial_sum.sign() > 0);
  CHECK(st.network_partial_sum <= st.D_at_sigma.hi);
}

TEST_CASE("bicubic pipeline rejects a tau off the singularity") {
  CHECK_THROWS_AS(bicubic_pipeline(20, BigRational(1, 4), BigRational(1, 1000000)), ConsistencyFailure);
}
