#include "mapcount/bicubic.hpp"

#include <cmath>

#include "mapcount/connectivity_tower.hpp"

namespace mapcount {

namespace {

using Box = std::array<Interval, 2>;

BigRational from_double(double v) { return BigRational(mpq_class(v)); }

// Nearest multiple of 2^-bits, to stop midpoints from growing without bound.
BigRational round_dyadic(const BigRational& v, unsigned bits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  return BigRational(floor(v * BigRational(scale) + BigRational(1, 2)), scale);
}

Interval pt(const BigRational& v) { return Interval::point(v); }

BigRational mb_at(const BigRational& z) {
  // (-1 + 12z - 24z^2 + (1 - 8z)^{3/2}) / (32 z^2) at z = 1/8, where the root term vanishes
  return (BigRational(-1) + BigRational(12) * z - BigRational(24) * z * z) / (BigRational(32) * z * z);
}

}  // namespace

QPoly bicubic_reference_polynomial() {
  return QPoly(std::vector<BigRational>{1000, 0, -4332, 0, 750, 0, 125});
}

std::array<Interval, 2> krawczyk_solve(const System2& s, Box box, const BigRational& width) {
  for (int iter = 0; iter < 200; ++iter) {
    const Box m{pt(round_dyadic(box[0].mid(), 200)), pt(round_dyadic(box[1].mid(), 200))};
    const auto fm = s.f(m);
    const auto jm = s.jacobian(m);
    const double a = jm[0][0].lo.to_double(), b = jm[0][1].lo.to_double();
    const double c = jm[1][0].lo.to_double(), d = jm[1][1].lo.to_double();
    const double det = a * d - b * c;
    if (det == 0 || !std::isfinite(det)) throw NoRootInInterval("singular Jacobian in Krawczyk step");
    const BigRational y[2][2] = {{from_double(d / det), from_double(-b / det)},
                                 {from_double(-c / det), from_double(a / det)}};
    const auto jx = s.jacobian(box);
    Box k;
    for (int i = 0; i < 2; ++i) {
      Interval acc = m[i] - (pt(y[i][0]) * fm[0] + pt(y[i][1]) * fm[1]);
      for (int j = 0; j < 2; ++j) {
        // (I - Y J(X))_{ij}
        Interval e = pt(BigRational(i == j ? 1 : 0)) - (pt(y[i][0]) * jx[0][j] + pt(y[i][1]) * jx[1][j]);
        acc = acc + e * (box[j] - m[j]);
      }
      k[i] = acc;
    }
    if (!(box[0].strictly_contains(k[0]) && box[1].strictly_contains(k[1]))) {
      throw NoRootInInterval("Krawczyk operator does not map the box into its interior");
    }
    box = {intersect(box[0], k[0]), intersect(box[1], k[1])};
    if (box[0].width() <= width && box[1].width() <= width) return box;
  }
  throw NoRootInInterval("Krawczyk iteration did not reach the requested width");
}

BicubicState bicubic_pipeline(std::size_t order, const BigRational& tau, const BigRational& width) {
  BicubicState st;
  st.tau = tau;
  st.Mb = bipartite_closed_form(order);
  const std::size_t n = st.Mb.order();
  const QSeries z = QSeries::var(n);
  const QSeries one = QSeries::one(n);
  const QSeries k = z * (one + st.Mb) * (one + st.Mb) * (one + st.Mb);
  st.G = compose(st.Mb, reversion(k));
  st.G_check = solve_triangular<BigRational>(
      std::function<QSeries(const QSeries&)>([&](const QSeries& g) { return g + st.Mb - compose(g, k); }), n);
  if (!(st.G == st.G_check)) throw ConsistencyFailure("3-connected bicubic series differ between methods");

  // G is singular where the substitution reaches the singularity of Mb
  st.zeta = BigRational(1, 8);
  st.G_at_tau = mb_at(st.zeta);
  const BigRational one_q(1);
  if (!(st.zeta * pow(one_q + st.G_at_tau, 3) == tau)) {
    throw ConsistencyFailure("tau is not the image of the singularity of Mb");
  }

  // D = G(x^2 (1+D)^3)/2 - x^2 (1+D)/2, triangular in x
  const std::size_t nd = 2 * n - 1;
  const QSeries x = QSeries::var(nd);
  const QSeries x2 = x * x;
  const QSeries onex = QSeries::one(nd);
  const BigRational half(1, 2);
  st.D_net = solve_triangular<BigRational>(
      std::function<QSeries(const QSeries&)>([&](const QSeries& d) {
        const QSeries u = onex + d;
        return compose(st.G, x2 * u * u * u).truncated(nd) * half - x2 * u * half;
      }),
      nd);

  // singular system in (x, D): x^2 (1+D)^3 = tau, D + x^2 (1+D)/2 = G(tau)/2
  const Interval t = pt(tau), g = pt(st.G_at_tau), h = pt(half), I1 = pt(one_q);
  System2 sys;
  sys.f = [=](const Box& v) {
    const Interval u = I1 + v[1];
    return Box{v[0] * v[0] * u * u * u - t, v[1] + v[0] * v[0] * u * h - g * h};
  };
  sys.jacobian = [=](const Box& v) {
    const Interval u = I1 + v[1];
    const Interval three = pt(BigRational(3)), two = pt(BigRational(2));
    return std::array<Box, 2>{Box{two * v[0] * u * u * u, three * v[0] * v[0] * u * u},
                              Box{v[0] * u, I1 + v[0] * v[0] * h}};
  };
  // floating Newton from the origin of the network branch (D = 0) for the start box
  double xs = 0.5, ds = 0.0;
  const double tf = tau.to_double(), gf = st.G_at_tau.to_double();
  for (int i = 0; i < 100; ++i) {
    const double u = 1 + ds;
    const double f1 = xs * xs * u * u * u - tf, f2 = ds + xs * xs * u / 2 - gf / 2;
    const double a = 2 * xs * u * u * u, b = 3 * xs * xs * u * u, c = xs * u, d = 1 + xs * xs / 2;
    const double det = a * d - b * c;
    xs -= (d * f1 - b * f2) / det;
    ds -= (-c * f1 + a * f2) / det;
  }
  if (!(xs > 0 && xs < 1) || !(ds >= 0)) throw NoRootInInterval("singular system has no admissible root in (0, 1)");
  const BigRational r(1, 1000000);
  const Box start{Interval(from_double(xs) - r, from_double(xs) + r), Interval(from_double(ds) - r, from_double(ds) + r)};
  const Box sol = krawczyk_solve(sys, start, width);
  st.sigma = sol[0];
  st.D_at_sigma = sol[1];
  if (!(st.sigma.lo.sign() > 0 && st.sigma.hi < one_q)) throw NoRootInInterval("sigma outside (0, 1)");
  st.delta = Interval(one_q / st.sigma.hi, one_q / st.sigma.lo);

  // eliminate D: resultant in D with s = x^2, then s -> z^2
  AlgebraicCurve e1, e2;
  e1.p = {QPoly(std::vector<BigRational>{-tau, 1}), QPoly(std::vector<BigRational>{0, 3}),
          QPoly(std::vector<BigRational>{0, 3}), QPoly(std::vector<BigRational>{0, 1})};
  e2.p = {QPoly(std::vector<BigRational>{-st.G_at_tau * half, half}), QPoly(std::vector<BigRational>{1, half})};
  const QPoly in_s = resultant_T(e1, e2);
  std::vector<BigRational> zc;
  for (std::size_t i = 0; i < in_s.size(); ++i) {
    zc.push_back(in_s.coeff(i));
    if (i + 1 < in_s.size()) zc.emplace_back(0);
  }
  st.sigma_poly = primitive_part(QPoly(std::move(zc)));
  const QPoly ref = bicubic_reference_polynomial();
  st.matches_reference = st.sigma_poly == primitive_part(ref);
  const auto roots = isolate_real_roots(ref, BigRational(0), one_q);
  if (roots.empty()) throw NoRootInInterval("reference polynomial has no root in (0, 1)");
  st.smallest_root = roots.front();
  st.smallest_root.refine(width);
  st.straddles_zero = ref(st.sigma.lo).sign() * ref(st.sigma.hi).sign() < 0;
  st.network_partial_sum = 0;
  for (std::size_t i = st.D_net.order(); i-- > 0;) st.network_partial_sum = st.network_partial_sum * st.sigma.lo + st.D_net[i];
  return st;
}

}  // namespace mapcount
