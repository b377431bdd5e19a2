#include "mapcount/connectivity_tower.hpp"

#include <omp.h>

namespace mapcount {

namespace {

template <class R>
using Series = TruncSeries<R>;

template <class R>
Series<R> core_substitution_inverse(const Series<R>& M) {
  if (M.order() < 2 || is_zero(M[0])) throw ValuationError("zM^2 must have valuation exactly 1");
  const Series<R> z = Series<R>::var(M.order());
  return reversion(z * M * M);
}

// Everything up to the 3-connected right-hand sides, generic over the
// coefficient ring so the exact and pointwise paths share one definition.
template <class R>
struct Front {
  Series<R> B1, B2, D1, D2, S1, S2, P1, P2, Q1, Q2, A, Bv;
};

template <class R>
std::pair<Series<R>, Series<R>> two_connected_generic(const Series<R>& M, const Series<R>& mono,
                                                      const Series<R>& bi, const R& nu) {
  const std::size_t n = M.order();
  const Series<R> z = Series<R>::var(n);
  const Series<R> zMM = z * M * M;
  const Series<R> hinv = core_substitution_inverse(M);
  return {compose(mono - zMM * (nu + nu), hinv), compose(bi - zMM, hinv)};
}

template <class R>
std::pair<Series<R>, Series<R>> cramer_generic(const Series<R>& D1, const Series<R>& D2) {
  // S1 (1+D1) + S2 D2 = D1^2 + D2^2 and S1 D2 + S2 (1+D1) = 2 D1 D2
  const Series<R> one = Series<R>::one(D1.order());
  const Series<R> a = one + D1;
  const Series<R> r1 = D1 * D1 + D2 * D2;
  const Series<R> r2 = D1 * D2 * R(2);
  const Series<R> det_inv = inverse(a * a - D2 * D2);
  return {(r1 * a - r2 * D2) * det_inv, (r2 * a - r1 * D2) * det_inv};
}

template <class R, class DivNu>
Front<R> front_generic(const Series<R>& B1, const Series<R>& B2, const R& nu, Normalization norm,
                       DivNu div_nu, bool triangular) {
  Front<R> f;
  f.B1 = B1;
  f.B2 = B2;
  f.D1 = div_nu(B1.unshifted(1));
  f.D2 = B2.unshifted(1);
  const std::size_t n = f.D1.order();
  const Series<R> z = Series<R>::var(n);
  const Series<R> one = Series<R>::one(n);
  if (triangular) {
    using Vec = std::vector<Series<R>>;
    const auto s = solve_triangular<R>(
        std::function<Vec(const Vec&)>([&](const Vec& x) {
          return Vec{(f.D1 - x[0]) * f.D1 + (f.D2 - x[1]) * f.D2, (f.D2 - x[1]) * f.D1 + (f.D1 - x[0]) * f.D2};
        }),
        2, n);
    f.S1 = s[0];
    f.S2 = s[1];
  } else {
    std::tie(f.S1, f.S2) = cramer_generic(f.D1, f.D2);
  }
  f.P1 = f.D1 * f.D1 * inverse(one + f.D1);
  f.P2 = f.D2 * f.D2 * inverse(one + f.D2);
  const Series<R> R1 = f.D1 - z * nu - f.S1 - f.P1;
  const Series<R> R2 = f.D2 - z - f.S2 - f.P2;
  switch (norm) {
    case Normalization::Bare:
      f.Q1 = R1;
      f.Q2 = R2;
      break;
    case Normalization::FirstArgument:
      f.Q1 = R1 * f.D2;
      f.Q2 = R2 * f.D2;
      break;
    case Normalization::RootNetwork:
      f.Q1 = R1 * f.D1;
      f.Q2 = R2 * f.D2;
      break;
  }
  f.A = f.D2;
  f.Bv = f.D1.unshifted(1) * inverse(f.D2.unshifted(1));
  return f;
}

// Sum_k c_k B^k truncated to `order`.
template <class R, class C>
Series<R> eval_at_series(const std::vector<C>& c, const Series<R>& B, std::size_t order) {
  const Series<R> Bt = B.truncated(order);
  Series<R> acc = Series<R>::zero(order);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * Bt;
    acc[0] += R(c[k]);
  }
  return acc;
}

// Coefficients of T with Q = T(A, Bv), A = z + O(z^2), Bv = nu + O(z).
NuSeries solve_three_connected_symbolic(const NuSeries& Q, const NuSeries& A, const NuSeries& Bv) {
  const std::size_t n = Q.order();
  std::vector<PolyNu> t(n);
  NuSeries acc = NuSeries::zero(n);
  NuSeries Apow = NuSeries::one(n);
  if (n > 0 && !Q[0].is_zero()) throw ConsistencyFailure("3-connected right-hand side has a constant term");
  for (std::size_t m = 1; m < n; ++m) {
    Apow = Apow * A;
    t[m] = Q[m] - acc[m];
    if (!t[m].is_zero()) {
      // p_m(Bv) as a series with polynomial coefficients
      const NuSeries pb = eval_at_series<PolyNu>(t[m].coeffs(), Bv, n - m);
      acc += (Apow * pb).truncated(n);
    }
  }
  return NuSeries(std::move(t));
}

// Q = T(A, Bv) substituted back.
NuSeries substitute_three_connected(const NuSeries& T, const NuSeries& A, const NuSeries& Bv) {
  const std::size_t n = T.order();
  NuSeries acc = NuSeries::zero(n);
  NuSeries Apow = NuSeries::one(n);
  if (n > 0 && !T[0].is_zero()) throw ConsistencyFailure("3-connected series has a constant term");
  for (std::size_t m = 1; m < n; ++m) {
    Apow = Apow * A;
    if (!T[m].is_zero()) acc += (Apow * eval_at_series<PolyNu>(T[m].coeffs(), Bv, n - m)).truncated(n);
  }
  return acc;
}

using ModSeries = Series<ModP>;

std::vector<std::uint32_t> raw(const ModSeries& s) {
  std::vector<std::uint32_t> out;
  for (const auto& c : s.coeffs()) out.push_back(c.value());
  return out;
}

ModSeries from_raw(const std::vector<std::uint32_t>& v) {
  std::vector<ModP> c;
  for (auto x : v) c.push_back(ModP::from_raw(x));
  return ModSeries(std::move(c));
}

struct PointData {
  std::vector<std::uint32_t> m11, dy, dx, B1, B2, Q1, Q2, A, Bv;
};

// Pointwise data for the 3-connected solve at every point: p_m(nu0) is
// read off at all points, interpolated, and p_m(Bv) removed point by point.
ModNuSeries solve_three_connected_pointwise(const std::vector<std::uint32_t>& points,
                                            const std::vector<PointData>& data, bool second) {
  const std::size_t np = points.size();
  const std::size_t n = (second ? data[0].Q2 : data[0].Q1).size();
  std::vector<ModSeries> rest(np), A(np), Bv(np), Apow(np);
  for (std::size_t i = 0; i < np; ++i) {
    rest[i] = from_raw(second ? data[i].Q2 : data[i].Q1);
    A[i] = from_raw(data[i].A);
    Bv[i] = from_raw(data[i].Bv);
    Apow[i] = ModSeries::one(n);
  }
  ModNuSeries out(n);
  std::vector<std::uint32_t> values(np);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < np; ++i) values[i] = rest[i][m].value();
    out[m] = interpolate_mod(points, values);
    bool nonzero = false;
    for (auto v : out[m]) nonzero = nonzero || v != 0;
    if (nonzero) {
      std::vector<ModP> c;
      for (auto v : out[m]) c.push_back(ModP::from_raw(v));
      while (!c.empty() && c.back().is_zero()) c.pop_back();
      for (std::size_t i = 0; i < np; ++i) {
        const ModSeries pb = eval_at_series<ModP>(c, Bv[i], n - m);
        rest[i] -= (Apow[i] * pb).truncated(n);
      }
    }
    for (std::size_t i = 0; i < np; ++i) Apow[i] = (Apow[i] * A[i]).truncated(n);
  }
  return out;
}

}  // namespace

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::Bare: return "bare";
    case Normalization::FirstArgument: return "first_argument";
    case Normalization::RootNetwork: return "root_network";
  }
  return "?";
}

Normalization parse_normalization(const std::string& s) {
  for (auto n : all_normalizations()) {
    if (to_string(n) == s) return n;
  }
  throw ParseError("unknown normalization '" + s + "'");
}

const std::vector<Normalization>& all_normalizations() {
  static const std::vector<Normalization> all{Normalization::Bare, Normalization::FirstArgument,
                                              Normalization::RootNetwork};
  return all;
}

QSeries two_connected_from_maps(const QSeries& M) {
  const std::size_t n = M.order();
  const QSeries z = QSeries::var(n);
  const QSeries hinv = core_substitution_inverse(M);
  return compose(M - QSeries::one(n) - z * M * M * BigRational(2), hinv);
}

QSeries bipartite_two_connected(const QSeries& Mb) {
  const std::size_t n = Mb.order();
  if (n < 2) throw ValuationError("need at least two coefficients");
  const QSeries z = QSeries::var(n);
  const QSeries one = QSeries::one(n);
  const QSeries k = z * (one + Mb) * (one + Mb);
  return compose(Mb - k, reversion(k));
}

TowerUncoloured build_uncoloured_tower(const QSeries& M) {
  TowerUncoloured t;
  t.M = M;
  t.B = two_connected_from_maps(M);
  t.D = t.B.unshifted(1);
  const std::size_t n = t.D.order();
  const QSeries one = QSeries::one(n);
  t.S = solve_triangular<BigRational>(
      std::function<QSeries(const QSeries&)>([&](const QSeries& s) { return t.D * (t.D - s); }), n);
  t.P = t.D * t.D * inverse(one + t.D);
  t.f = reversion(t.D);
  const QSeries z = QSeries::var(n);
  t.T = z - z * z * BigRational(2) * inverse(one + z) - t.f;
  return t;
}

std::pair<NuSeries, NuSeries> build_bicoloured_two_connected(const IsingSplit& split) {
  return two_connected_generic(split.total, split.mono, split.bi, PolyNu::variable());
}

std::pair<NuSeries, NuSeries> series_networks_cramer(const NuSeries& D1, const NuSeries& D2) {
  return cramer_generic(D1, D2);
}

namespace {

NuSeries divide_by_nu(const NuSeries& s) {
  return s.map([](const PolyNu& p) {
    auto q = p.checked_unshift(1);
    if (!q) throw DivisibilityError("monochromatic 2-connected series is not divisible by nu");
    return *q;
  });
}

}  // namespace

TowerBicoloured build_bicoloured_three_connected(const NuSeries& B1, const NuSeries& B2, Normalization norm) {
  const Front<PolyNu> f = front_generic(B1, B2, PolyNu::variable(), norm, divide_by_nu, true);
  TowerBicoloured t;
  t.normalization = norm;
  t.B1 = f.B1;
  t.B2 = f.B2;
  t.D1 = f.D1;
  t.D2 = f.D2;
  t.S1 = f.S1;
  t.S2 = f.S2;
  t.P1 = f.P1;
  t.P2 = f.P2;
  t.T1 = solve_three_connected_symbolic(f.Q1, f.A, f.Bv.truncated(f.Q1.order()));
  t.T2 = solve_three_connected_symbolic(f.Q2, f.A, f.Bv.truncated(f.Q2.order()));
  if (!(substitute_three_connected(t.T1, f.A, f.Bv) == f.Q1) ||
      !(substitute_three_connected(t.T2, f.A, f.Bv) == f.Q2)) {
    throw ConsistencyFailure("3-connected series do not reproduce the networks");
  }
  t.Tb = at_nu(t.T2, 0);
  return t;
}

FastPipelineResult bicoloured_pipeline_multimodular(std::size_t order, Normalization norm) {
  // maps to order+2 give networks, and hence T, to order `order`
  const std::size_t m_order = order + 2;
  const auto primes = primes_with_spare(bicoloured_bound(m_order));
  std::vector<std::uint32_t> points;
  for (std::uint32_t v = 1; v <= m_order + 1; ++v) points.push_back(v);
  std::vector<std::vector<PointData>> data(primes.size(), std::vector<PointData>(points.size()));
  for_each_prime_point(primes, points.size(), [&](std::size_t pi, std::size_t xi) {
    const ModP nu = ModP(points[xi]);
    const KernelSlices k = catalytic_kernel_point(m_order, points[xi]);
    PointData& d = data[pi][xi];
    d.m11 = k.m11;
    d.dy = k.dy;
    d.dx = k.dx;
    const ModSeries M = from_raw(k.m11);
    const ModSeries z = ModSeries::var(m_order);
    const ModSeries zM = z * M, zMM = zM * M;
    const ModSeries del = zMM * ModP(2) + zM + z * from_raw(k.dy);
    const ModSeries con = zMM + zM + z * from_raw(k.dx);
    const auto [B1, B2] = two_connected_generic(M, con * nu, del - con, nu);
    const ModP nu_inv = nu.inverse();
    const Front<ModP> f = front_generic(
        B1, B2, nu, norm, [nu_inv](const ModSeries& s) { return s * nu_inv; }, false);
    d.B1 = raw(B1);
    d.B2 = raw(B2);
    d.Q1 = raw(f.Q1.truncated(order));
    d.Q2 = raw(f.Q2.truncated(order));
    d.A = raw(f.A.truncated(order));
    d.Bv = raw(f.Bv.truncated(order));
  });
  const std::size_t np = primes.size();
  std::vector<ModNuSeries> m11(np), dy(np), dx(np), b1(np), b2(np), t1(np), t2(np);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t pi = 0; pi < np; ++pi) {
    PrimeScope scope(primes[pi]);
    std::vector<std::vector<std::uint32_t>> a, b, c, e, g;
    for (const auto& d : data[pi]) {
      a.push_back(d.m11);
      b.push_back(d.dy);
      c.push_back(d.dx);
      e.push_back(d.B1);
      g.push_back(d.B2);
    }
    m11[pi] = interpolate_series(points, a);
    dy[pi] = interpolate_series(points, b);
    dx[pi] = interpolate_series(points, c);
    b1[pi] = interpolate_series(points, e);
    b2[pi] = interpolate_series(points, g);
    t1[pi] = solve_three_connected_pointwise(points, data[pi], false);
    t2[pi] = solve_three_connected_pointwise(points, data[pi], true);
  }
  FastPipelineResult r;
  r.primes = primes.size();
  CatalyticSolution sol;
  sol.M11 = reconstruct_series(primes, m11);
  sol.dy = reconstruct_series(primes, dy);
  sol.dx = reconstruct_series(primes, dx);
  r.split = split_by_root_edge(sol);
  r.B1 = reconstruct_series(primes, b1);
  r.B2 = reconstruct_series(primes, b2);
  r.T1 = reconstruct_series(primes, t1);
  r.T2 = reconstruct_series(primes, t2);
  r.Tb = at_nu(r.T2, 0);
  return r;
}

std::vector<NormalizationEvidence> compare_normalizations(const IsingSplit& small_split, const PolyNu& t1_six,
                                                          const PolyNu& t2_six,
                                                          const std::map<std::size_t, long>& tb_table,
                                                          std::size_t table_order) {
  std::vector<NormalizationEvidence> out;
  const auto [B1, B2] = build_bicoloured_two_connected(small_split);
  for (auto norm : all_normalizations()) {
    NormalizationEvidence ev;
    ev.norm = norm;
    const TowerBicoloured t = build_bicoloured_three_connected(B1, B2, norm);
    ev.vanishes_below_six = true;
    for (std::size_t k = 0; k < std::min<std::size_t>(6, t.T1.order()); ++k) {
      ev.vanishes_below_six = ev.vanishes_below_six && t.T1[k].is_zero() && t.T2[k].is_zero();
    }
    ev.matches_base_case = t.T1.order() > 6 && t.T1[6] == t1_six && t.T2[6] == t2_six;
    const FastPipelineResult fast = bicoloured_pipeline_multimodular(table_order, norm);
    ev.matches_table = true;
    for (const auto& [k, v] : tb_table) {
      if (k >= fast.Tb.order() || !(fast.Tb[k] == BigRational(v))) {
        ev.matches_table = false;
        ev.detail = "T_b differs at z^" + std::to_string(k) +
                    (k < fast.Tb.order() ? " (got " + fast.Tb[k].to_string() + ")" : " (not computed)");
        break;
      }
    }
    if (ev.detail.empty()) {
      ev.detail = ev.matches_base_case ? "matches" : "z^6 gives " + format_poly(t.T1[6]) + " / " + format_poly(t.T2[6]);
    }
    out.push_back(ev);
  }
  return out;
}

}  // namespace mapcount
