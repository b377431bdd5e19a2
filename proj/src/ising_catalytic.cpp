#include "mapcount/ising_catalytic.hpp"

#include <climits>

namespace mapcount {

namespace {

using E = CatalyticPoly::Exponent;

const CatalyticPoly& nu_poly() {
  static const CatalyticPoly p = CatalyticPoly::monomial(1, {0, 0, 1});
  return p;
}

NuSeries slice(const TruncSeries<CatalyticPoly>& M, PolyNu (*fn)(const CatalyticPoly&)) {
  std::vector<PolyNu> c;
  for (const auto& m : M.coeffs()) c.push_back(fn(m));
  return NuSeries(std::move(c));
}

PolyNu slice_total(const CatalyticPoly& p) { return p.at_xy1(); }
PolyNu slice_dy(const CatalyticPoly& p) { return p.dy_at_1().at_xy1(); }
PolyNu slice_dx(const CatalyticPoly& p) { return p.dx_at_1().at_xy1(); }

NuSeries nu_constant_series(std::size_t order, const PolyNu& c) { return NuSeries(order, c); }

}  // namespace

CatalyticSolution solve_catalytic_bicoloured(std::size_t order) {
  std::vector<CatalyticPoly> M;
  std::vector<CatalyticPoly> row, col;  // M_j(1,y), M_j(x,1)
  const CatalyticPoly& nu = nu_poly();
  const CatalyticPoly y = CatalyticPoly::monomial(1, {0, 1, 0});
  const CatalyticPoly x = CatalyticPoly::monomial(1, {1, 0, 0});
  const CatalyticPoly one(1);
  const CatalyticPoly face_factor = (one + nu) * y + (one - nu);
  const CatalyticPoly vertex_factor = x * nu - one;
  for (std::size_t n = 0; n < order; ++n) {
    CatalyticPoly mn;
    if (n == 0) {
      mn = one;
    } else {
      CatalyticPoly p1, p2;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        p1 += M[i] * row[j];
        p2 += M[i] * col[j];
      }
      const CatalyticPoly& prev = M[n - 1];
      CatalyticPoly t = face_factor * p1 + vertex_factor * p2;
      t += (nu - one) * (prev + prev.divided_difference_x());
      t += prev + prev.divided_difference_y();
      mn = t.shifted(E{1, 1, 0});
    }
    row.push_back(mn.at_x1());
    col.push_back(mn.at_y1());
    M.push_back(std::move(mn));
  }
  CatalyticSolution sol;
  sol.M_xy = TruncSeries<CatalyticPoly>(std::move(M));
  sol.M11 = slice(sol.M_xy, slice_total);
  sol.dy = slice(sol.M_xy, slice_dy);
  sol.dx = slice(sol.M_xy, slice_dx);
  return sol;
}

TruncSeries<CatalyticPoly> catalytic_rhs(const TruncSeries<CatalyticPoly>& M) {
  const std::size_t n = M.order();
  const CatalyticPoly& nu = nu_poly();
  const CatalyticPoly y = CatalyticPoly::monomial(1, {0, 1, 0});
  const CatalyticPoly x = CatalyticPoly::monomial(1, {1, 0, 0});
  const CatalyticPoly one(1);
  const auto row = M.map([](const CatalyticPoly& c) { return c.at_x1(); });
  const auto col = M.map([](const CatalyticPoly& c) { return c.at_y1(); });
  const auto ddx = M.map([](const CatalyticPoly& c) { return c.divided_difference_x(); });
  const auto ddy = M.map([](const CatalyticPoly& c) { return c.divided_difference_y(); });
  auto inner = (M * row) * ((one + nu) * y + (one - nu)) + (M * col) * (x * nu - one) +
               (M + ddx) * (nu - one) + M + ddy;
  auto shifted = inner.map([](const CatalyticPoly& c) { return c.shifted(E{1, 1, 0}); }).shifted(1);
  return TruncSeries<CatalyticPoly>::one(n) + shifted.truncated(n);
}

IsingSplit split_by_root_edge(const CatalyticSolution& sol) {
  const std::size_t n = sol.M11.order();
  const NuSeries& M = sol.M11;
  const NuSeries z = NuSeries::var(n);
  const NuSeries zM = z * M;
  const NuSeries zMM = zM * M;
  IsingSplit s;
  s.total = M;
  s.del = zMM * PolyNu(2) + zM + z * sol.dy;
  s.con = zMM + zM + z * sol.dx;
  s.bi = s.del - s.con;
  const PolyNu nu = PolyNu::variable();
  s.mono = s.con * nu;
  if (!(s.total == NuSeries::one(n) + s.mono + s.bi)) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!(s.total[k] == (k == 0 ? PolyNu(1) : PolyNu()) + s.mono[k] + s.bi[k])) {
        throw ConsistencyFailure("M = 1 + M_mono + M_bi fails at z^" + std::to_string(k));
      }
    }
  }
  s.bi_equals_del = s.bi == s.del;
  return s;
}

NuSeries parametrisation_S(std::size_t order) {
  const PolyNu nu = PolyNu::variable();
  const PolyNu nu2 = nu * nu;
  const NuSeries z = NuSeries::var(order);
  const NuSeries one = NuSeries::one(order);
  // phi(S) = S*D(S) - z*A(S)^2 with A, D the numerator and denominator
  // polynomials; Newton's method from S = 0 converges since phi'(0) = 1.
  auto poly_at = [&](const std::vector<PolyNu>& coeffs, const NuSeries& s) {
    NuSeries acc = NuSeries::zero(order);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * s + nu_constant_series(order, coeffs[i]);
    return acc;
  };
  const std::vector<PolyNu> A{PolyNu(1), nu * BigRational(3), nu * BigRational(-3), -nu2};
  const std::vector<PolyNu> dA{nu * BigRational(3), nu * BigRational(-6), nu2 * BigRational(-3)};
  const std::vector<PolyNu> D{PolyNu(1), PolyNu(-2), PolyNu(), nu2 * BigRational(2), -nu2};
  const std::vector<PolyNu> dD{PolyNu(-2), PolyNu(), nu2 * BigRational(6), nu2 * BigRational(-4)};
  NuSeries S = NuSeries::zero(order);
  for (std::size_t known = 1; known < 2 * order; known *= 2) {
    const NuSeries a = poly_at(A, S), d = poly_at(D, S);
    const NuSeries phi = S * d - z * a * a;
    const NuSeries dphi = d + S * poly_at(dD, S) - z * a * poly_at(dA, S) * PolyNu(2);
    S = S - phi * inverse(dphi);
  }
  (void)one;
  const NuSeries check = S * poly_at(D, S) - z * poly_at(A, S) * poly_at(A, S);
  if (!(check == NuSeries::zero(order))) throw ConsistencyFailure("parametrisation S did not converge");
  return S;
}

NuSeries parametrisation_M(std::size_t order) {
  const PolyNu nu = PolyNu::variable();
  const PolyNu nu2 = nu * nu, nu3 = nu2 * nu;
  const NuSeries S = parametrisation_S(order);
  auto poly_at = [&](const std::vector<PolyNu>& coeffs) {
    NuSeries acc = NuSeries::zero(order);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * S + nu_constant_series(order, coeffs[i]);
    return acc;
  };
  const NuSeries a = poly_at({PolyNu(1), nu * BigRational(3), nu * BigRational(-3), -nu2});
  const NuSeries d = poly_at({PolyNu(1), PolyNu(-2), PolyNu(), nu2 * BigRational(2), -nu2});
  const PolyNu one(1);
  const NuSeries e = poly_at({one, -(nu + one * BigRational(3)), nu * BigRational(2) + one,
                              -(nu - nu2 * BigRational(5)), nu - nu2 * BigRational(6),
                              (nu2 - nu3) * BigRational(2), nu3});
  const NuSeries dinv = inverse(d);
  return a * dinv * dinv * e;
}

void check_parametrisation(const NuSeries& M11) {
  const NuSeries P = parametrisation_M(M11.order());
  for (std::size_t k = 0; k < M11.order(); ++k) {
    if (!(P[k] == M11[k])) throw MismatchAt("parametrisation differs from the catalytic solution at z^" + std::to_string(k));
  }
}

QSeries solve_catalytic_uncoloured(std::size_t order) {
  std::vector<QPoly> M;  // polynomials in y
  std::vector<BigRational> at1;
  for (std::size_t n = 0; n < order; ++n) {
    QPoly mn;
    if (n == 0) {
      mn = QPoly(1);
    } else {
      QPoly sq;
      for (std::size_t i = 0; i < n; ++i) sq += M[i] * M[n - 1 - i];
      // (y f - f(1)) / (y - 1): coefficient c is the sum of f_a for a >= c
      const QPoly& prev = M[n - 1];
      std::vector<BigRational> dd(prev.size(), BigRational(0));
      BigRational run = 0;
      for (std::size_t a = prev.size(); a-- > 0;) {
        run += prev.coeff(a);
        dd[a] = run;
      }
      mn = sq.shifted(2) + QPoly(std::move(dd)).shifted(1);
    }
    BigRational s = 0;
    for (const auto& c : mn.coeffs()) s += c;
    at1.push_back(s);
    M.push_back(std::move(mn));
  }
  return QSeries(std::move(at1));
}

QSeries three_halves_power(const BigRational& c, std::size_t order) {
  // binom(3/2, k) (-c)^k by the ratio binom(a,k+1)/binom(a,k) = (a-k)/(k+1)
  std::vector<BigRational> out;
  BigRational term = 1;
  const BigRational a(mpz_class(3), mpz_class(2));
  for (std::size_t k = 0; k < order; ++k) {
    out.push_back(term);
    term = term * (a - BigRational(static_cast<long>(k))) / BigRational(static_cast<long>(k + 1)) * (-c);
  }
  return QSeries(std::move(out));
}

QSeries maps_closed_form(std::size_t order) {
  QSeries p = three_halves_power(12, order + 2);
  p[0] += -1;
  p[1] += 18;
  return p.unshifted(2) * BigRational(mpz_class(1), mpz_class(54));
}

QSeries bipartite_closed_form(std::size_t order) {
  QSeries p = three_halves_power(8, order + 2);
  p[0] += -1;
  p[1] += 12;
  p[2] += -24;
  return p.unshifted(2) * BigRational(mpz_class(1), mpz_class(32));
}

mpz_class maps_count(unsigned n) {
  mpz_class b, p;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  mpz_ui_pow_ui(p.get_mpz_t(), 3, n);
  return 2 * p * b / ((n + 1) * (n + 2));
}

QSeries at_nu(const NuSeries& s, const BigRational& v) {
  return s.map([&v](const PolyNu& p) { return p(v); });
}

NuSeries lift_nu(const QSeries& s) {
  return s.map([](const BigRational& c) { return PolyNu(c); });
}

int nu_degree_excess(const NuSeries& s) {
  int worst = INT_MIN;
  for (std::size_t n = 0; n < s.order(); ++n) {
    if (s[n].is_zero()) continue;
    worst = std::max(worst, s[n].degree() - static_cast<int>(n));
  }
  return worst;
}

}  // namespace mapcount
