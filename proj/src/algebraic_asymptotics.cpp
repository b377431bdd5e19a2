#include "mapcount/algebraic_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace mapcount {

namespace {

const BigRational kZero(0);
const BigRational kOne(1);
const BigRational kHalf(1, 2);

mpz_class lcm_of_denominators(const std::vector<QPoly>& ps) {
  mpz_class l = 1;
  for (const auto& p : ps)
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  return l;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<BigRational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[row]);
    const BigRational inv = kOne / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const BigRational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Rank modulo the current prime, used to skip full-rank systems cheaply.
std::size_t rank_mod(std::vector<std::vector<ModP>> m, std::size_t cols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[row]);
    const ModP inv = m[row][col].inverse();
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const ModP f = m[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return row;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    const QPoly r = s[s.size() - 2] % s.back();
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

std::size_t variations(const std::vector<QPoly>& seq, const BigRational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int sg = q(x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

BigRational cauchy_bound(const QPoly& p) {
  BigRational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, abs(p.coeff(i) / p.leading()));
  return m + kOne;
}

using Bivariate = std::vector<QPoly>;  // [j] = coefficient of Y^j, a polynomial in s

// Q(s, a(s) + Y) with binomial expansion.
Bivariate shift_y(const Bivariate& q, const QPoly& a) {
  const std::size_t d = q.size();
  Bivariate out(d);
  std::vector<QPoly> apow{QPoly(1)};
  for (std::size_t k = 1; k < d; ++k) apow.push_back(apow.back() * a);
  for (std::size_t j = 0; j < d; ++j) {
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= j; ++k) {
      // binom = C(j, k)
      out[k] += q[j] * apow[j - k] * BigRational(binom);
      binom = binom * static_cast<unsigned long>(j - k) / static_cast<unsigned long>(k + 1);
    }
  }
  return out;
}

std::optional<std::size_t> valuation(const QPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.coeff(i).is_zero()) return i;
  return std::nullopt;
}

struct Branch {
  std::vector<BigRational> y;  // coefficients of s^k, k = 0..max
};

void expand_branches(const Bivariate& q, const BigRational& last_exp, std::vector<BigRational> y, std::size_t max_k,
                     std::vector<Branch>& out, std::optional<BigRational>& radicand) {
  std::vector<std::optional<std::size_t>> v(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) v[j] = valuation(q[j]);
  if (!v[0]) out.push_back({y});  // Y = 0 solves the remaining equation exactly
  std::set<BigRational> gammas;
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = a + 1; b < q.size(); ++b) {
      if (!v[a] || !v[b]) continue;
      const BigRational g = BigRational(static_cast<long>(*v[a]) - static_cast<long>(*v[b])) /
                            BigRational(static_cast<long>(b - a));
      if (g <= last_exp) continue;
      BigRational best = BigRational(static_cast<long>(*v[a])) + BigRational(static_cast<long>(a)) * g;
      bool on_hull = true;
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (v[j] && BigRational(static_cast<long>(*v[j])) + BigRational(static_cast<long>(j)) * g < best) on_hull = false;
      }
      if (on_hull) gammas.insert(g);
    }
  }
  bool beyond = false;
  for (const auto& g : gammas) {
    if (g > BigRational(static_cast<long>(max_k))) {
      beyond = true;
      continue;
    }
    if (!g.is_integer()) continue;
    const long gi = g.numerator().get_si();
    // characteristic polynomial on the edge of slope g
    BigRational best;
    bool first = true;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!v[j]) continue;
      const BigRational val = BigRational(static_cast<long>(*v[j])) + BigRational(static_cast<long>(j)) * g;
      if (first || val < best) best = val;
      first = false;
    }
    std::vector<BigRational> phi(q.size(), kZero);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!v[j]) continue;
      if (BigRational(static_cast<long>(*v[j])) + BigRational(static_cast<long>(j)) * g == best)
        phi[j] = q[j].coeff(*v[j]);
    }
    QPoly ph(phi);
    while (ph.coeff(0).is_zero() && ph.degree() > 0) ph = *ph.checked_unshift(1);
    if (ph.degree() < 1) continue;
    const QPoly sf = squarefree_part(primitive_part(ph));
    const BigRational bound = cauchy_bound(sf);
    for (const auto& root : isolate_real_roots(sf, -bound, bound)) {
      const auto c = root.as_rational();
      if (!c) {
        // c^2 = r on an odd step: rational after rescaling (1 - z/rho) by r
        if (gi % 2 == 1 && sf.degree() == 2 && sf.coeff(1).is_zero() && !radicand) {
          radicand = -sf.coeff(0) / sf.coeff(2);
        }
        continue;
      }
      std::vector<BigRational> y2 = y;
      y2[static_cast<std::size_t>(gi)] += *c;
      expand_branches(shift_y(q, QPoly::monomial(*c, static_cast<std::size_t>(gi))), g, y2, max_k, out,
                      radicand);
    }
  }
  // some correction starts beyond max_k: the branch is known to that order
  if (v[0] && beyond) out.push_back({y});
}

// a sqrt(d) with d a positive integer: pull square factors out of d
void simplify_sqrt(BigRational& a, BigRational& d) {
  if (!d.is_integer()) return;
  mpz_class n = d.numerator(), out = 1;
  for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
      n /= p * p;
      out *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    out *= r;
    n = 1;
  }
  a *= BigRational(out);
  d = BigRational(n);
}

BigRational partial_sum(const QSeries& s, const BigRational& z) {
  BigRational acc = 0;
  for (std::size_t n = s.order(); n-- > 0;) acc = acc * z + s[n];
  return acc;
}

}  // namespace

int AlgebraicCurve::degree_z() const {
  int d = QPoly::kMinusInfinity;
  for (const auto& q : p) d = std::max(d, q.degree());
  return d;
}

QPoly AlgebraicCurve::at_z(const BigRational& z0) const {
  std::vector<BigRational> c;
  for (const auto& q : p) c.push_back(q(z0));
  return QPoly(std::move(c));
}

QSeries AlgebraicCurve::residual(const QSeries& s) const {
  const std::size_t n = s.order();
  QSeries acc = QSeries::zero(n);
  QSeries pw = QSeries::one(n);
  for (const auto& q : p) {
    std::vector<BigRational> c(n, kZero);
    for (std::size_t k = 0; k < std::min(n, q.size()); ++k) c[k] = q.coeff(k);
    acc += QSeries(std::move(c)) * pw;
    pw = pw * s;
  }
  return acc;
}

AlgebraicCurve AlgebraicCurve::normalized() const {
  AlgebraicCurve c = *this;
  while (!c.p.empty() && c.p.back().is_zero()) c.p.pop_back();
  if (c.p.empty()) return c;
  const mpz_class l = lcm_of_denominators(c.p);
  mpz_class g = 0;
  for (const auto& q : c.p)
    for (const auto& x : q.coeffs()) {
      const mpz_class n = x.numerator() * (l / x.denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  BigRational scale(l, g);
  if (c.p.back().leading().sign() < 0) scale = -scale;
  for (auto& q : c.p) q *= scale;
  return c;
}

Json curve_to_json(const AlgebraicCurve& c) {
  Json j;
  j["degT"] = c.degree_T();
  Json p = Json::array();
  for (const auto& q : c.p) {
    Json row = Json::array();
    for (const auto& x : q.coeffs()) row.push_back(x.to_string());
    p.push_back(row);
  }
  j["p"] = p;
  return j;
}

AlgebraicCurve curve_from_json(const Json& j) {
  try {
    AlgebraicCurve c;
    for (const auto& row : j.at("p")) {
      std::vector<BigRational> coeffs;
      for (const auto& x : row) coeffs.push_back(BigRational::parse(x.get<std::string>()));
      c.p.emplace_back(std::move(coeffs));
    }
    if (j.contains("degT") && j.at("degT").get<std::size_t>() + 1 != c.p.size()) {
      throw ParseError("degT does not match the number of coefficient rows");
    }
    if (c.p.size() < 2 || c.p.back().is_zero()) throw ParseError("curve needs a nonzero leading coefficient in T");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad curve JSON: ") + e.what());
  }
}

AlgebraicCurve guess_min_poly(const QSeries& s, std::size_t degT_max, std::size_t degZ_max, std::size_t verify) {
  const std::size_t n = s.order();
  if (n <= verify) throw InsufficientData("series shorter than the verification margin");
  const std::size_t rows = n - verify;
  std::vector<QSeries> pw{QSeries::one(n)};
  for (std::size_t i = 1; i <= degT_max; ++i) pw.push_back(pw.back() * s);
  const std::uint32_t prime = kernel_primes(1)[0];
  bool starved = false;
  for (std::size_t dT = 1; dT <= degT_max; ++dT) {
    for (std::size_t dZ = 0; dZ <= degZ_max; ++dZ) {
      const std::size_t unknowns = (dT + 1) * (dZ + 1);
      if (unknowns + verify > n) {
        starved = true;
        break;
      }
      auto entry = [&](std::size_t row, std::size_t col) {
        const std::size_t i = col / (dZ + 1), k = col % (dZ + 1);
        return row >= k ? pw[i][row - k] : kZero;
      };
      {
        PrimeScope scope(prime);
        std::vector<std::vector<ModP>> mm(rows, std::vector<ModP>(unknowns));
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < unknowns; ++c) mm[r][c] = to_modp(entry(r, c));
        if (rank_mod(std::move(mm), unknowns) == unknowns) continue;
      }
      std::vector<std::vector<BigRational>> m(rows, std::vector<BigRational>(unknowns));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < unknowns; ++c) m[r][c] = entry(r, c);
      const auto pivots = rref(m, unknowns);
      if (pivots.size() == unknowns) continue;
      if (unknowns - pivots.size() > 1) {
        throw AmbiguousKernel("nullspace of dimension " + std::to_string(unknowns - pivots.size()) +
                              " at degT=" + std::to_string(dT) + " degZ=" + std::to_string(dZ));
      }
      std::size_t free_col = 0;
      while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
      std::vector<BigRational> x(unknowns, kZero);
      x[free_col] = kOne;
      for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
      AlgebraicCurve c;
      for (std::size_t i = 0; i <= dT; ++i)
        c.p.emplace_back(std::vector<BigRational>(x.begin() + static_cast<std::ptrdiff_t>(i * (dZ + 1)),
                                                  x.begin() + static_cast<std::ptrdiff_t>((i + 1) * (dZ + 1))));
      c = c.normalized();
      if (c.degree_T() < dT) continue;  // degenerate solution, not a curve of this degree
      if (c.residual(s) == QSeries::zero(n)) return c;
    }
  }
  if (starved) throw InsufficientData("not enough coefficients for the requested degree bounds");
  throw NotFound("no algebraic equation within degT <= " + std::to_string(degT_max) +
                 ", degZ <= " + std::to_string(degZ_max));
}

BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && m[pr][col].is_zero()) ++pr;
    if (pr == n) return 0;
    if (pr != col) {
      std::swap(m[pr], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const BigRational inv = kOne / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const BigRational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

QPoly resultant_T(const AlgebraicCurve& a, const AlgebraicCurve& b) {
  const std::size_t m = a.degree_T(), n = b.degree_T();
  const std::size_t size = m + n;
  const int da = std::max(a.degree_z(), 0), db = std::max(b.degree_z(), 0);
  const std::size_t bound = n * static_cast<std::size_t>(da) + m * static_cast<std::size_t>(db);
  std::vector<BigRational> xs, ys;
  for (std::size_t k = 0; k <= bound; ++k) {
    const BigRational z0(static_cast<long>(k));
    std::vector<std::vector<BigRational>> s(size, std::vector<BigRational>(size, kZero));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a.p[m - i](z0);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b.p[n - i](z0);
    xs.push_back(z0);
    ys.push_back(determinant(std::move(s)));
  }
  // Newton interpolation
  std::vector<BigRational> c = ys;
  for (std::size_t level = 1; level < c.size(); ++level)
    for (std::size_t i = c.size() - 1; i >= level; --i) {
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  QPoly out;
  for (std::size_t i = c.size(); i-- > 0;) out = out * QPoly(std::vector<BigRational>{-xs[i], kOne}) + QPoly(c[i]);
  return out;
}

QPoly discriminant_z(const AlgebraicCurve& c) {
  AlgebraicCurve d;
  for (std::size_t i = 1; i < c.p.size(); ++i) d.p.push_back(c.p[i] * BigRational(static_cast<long>(i)));
  return primitive_part(resultant_T(c, d));
}

void IsolatedRoot::refine(const BigRational& width) {
  if (is_exact()) return;
  int slo = poly(lo).sign();
  while (hi - lo > width) {
    const BigRational mid = (lo + hi) / BigRational(2);
    const int sm = poly(mid).sign();
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

std::optional<BigRational> IsolatedRoot::as_rational() const {
  if (is_exact()) return lo;
  const QPoly ip = primitive_part(poly);
  const BigRational lead = abs(ip.leading());
  IsolatedRoot r = *this;
  r.refine(kOne / (lead * lead * BigRational(4)));
  if (r.is_exact()) return r.lo;
  const BigRational cand = simplest_rational(r.lo, r.hi);
  if (poly(cand).is_zero()) return cand;
  return std::nullopt;
}

std::size_t count_real_roots(const QPoly& p, const BigRational& a, const BigRational& b) {
  if (p.degree() < 1) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  const std::size_t va = variations(seq, a), vb = variations(seq, b);
  return va > vb ? va - vb : 0;
}

std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p, const BigRational& a, const BigRational& b) {
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  const QPoly sf = squarefree_part(p);
  const auto seq = sturm_sequence(sf);
  auto count = [&](const BigRational& x, const BigRational& y) {
    const std::size_t vx = variations(seq, x), vy = variations(seq, y);
    return vx > vy ? vx - vy : 0;
  };
  std::vector<std::pair<BigRational, BigRational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const std::size_t c = count(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      if (sf(hi).is_zero()) {
        out.push_back({sf, hi, hi});
        continue;
      }
      // move the lower end off a root that belongs to the neighbouring cell
      BigRational l = lo;
      if (sf(l).is_zero()) {
        BigRational step = (hi - lo) / BigRational(2);
        while (count(lo + step, hi) != 1) step /= BigRational(2);
        l = lo + step;
      }
      out.push_back({sf, l, hi});
      continue;
    }
    const BigRational mid = (lo + hi) / BigRational(2);
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

BigRational simplest_rational(const BigRational& lo, const BigRational& hi) {
  if (lo.sign() <= 0 && hi.sign() >= 0) return kZero;
  if (hi.sign() < 0) return -simplest_rational(-hi, -lo);
  const mpz_class fl = floor(lo);
  const BigRational flr(fl);
  if (flr == lo) return lo;
  const BigRational next(mpz_class(fl + 1));
  if (next <= hi) return next;
  return flr + kOne / simplest_rational(kOne / (hi - flr), kOne / (lo - flr));
}

BigRational SingularExpansion::coefficient(const BigRational& exponent) const {
  for (const auto& t : terms)
    if (t.exponent == exponent) return t.coeff;
  return kZero;
}

std::optional<SingularTerm> SingularExpansion::dominant_singular_term() const {
  for (const auto& t : terms)
    if (!t.exponent.is_integer() && !t.coeff.is_zero()) return t;
  return std::nullopt;
}

SingularExpansion puiseux_branch(const AlgebraicCurve& c, const BigRational& rho, const QSeries& series,
                                 std::size_t max_half) {
  // value of the branch at rho, chosen among the real roots of P(rho, T)
  const QPoly at_rho = c.at_z(rho);
  if (at_rho.degree() < 1) throw UnsupportedBranch("P(rho, T) is constant");
  const QPoly sf = squarefree_part(at_rho);
  const BigRational bound = cauchy_bound(sf);
  auto roots = isolate_real_roots(sf, -bound, bound);
  const BigRational near_rho = rho * (kOne - BigRational(1) / BigRational(1024));
  const BigRational estimate = partial_sum(series, near_rho);
  std::vector<std::pair<BigRational, std::size_t>> dist;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    roots[i].refine(BigRational(1, 1 << 30));
    dist.emplace_back(abs(roots[i].interval().mid() - estimate), i);
  }
  if (dist.empty()) throw UnsupportedBranch("no real branch value at rho");
  std::sort(dist.begin(), dist.end());
  if (dist.size() > 1 && dist[1].first < dist[0].first * BigRational(4)) {
    throw BranchSelectionAmbiguous("two branch values at rho are equally close to the series");
  }
  const auto t0 = roots[dist[0].second].as_rational();
  if (!t0) throw UnsupportedBranch("branch value at rho is irrational");

  // P(rho (1 - lambda u^2), t0 + Y); lambda = 1 unless an odd coefficient is
  // a square root, then (1 - z/rho) = lambda u^2 makes the branch rational in u
  auto expand = [&](const BigRational& lambda, std::optional<BigRational>& radicand) {
    const QPoly zs(std::vector<BigRational>{rho, kZero, -rho * lambda});
    Bivariate q;
    for (const auto& pi : c.p) q.push_back(compose(pi, zs));
    q = shift_y(q, QPoly(*t0));
    std::vector<Branch> branches;
    expand_branches(q, kZero, std::vector<BigRational>(max_half + 1, kZero), max_half, branches, radicand);
    std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) { return a.y < b.y; });
    branches.erase(std::unique(branches.begin(), branches.end(),
                               [](const Branch& a, const Branch& b) { return a.y == b.y; }),
                   branches.end());
    return branches;
  };
  BigRational lambda = 1;
  std::optional<BigRational> radicand;
  std::vector<Branch> branches = expand(lambda, radicand);
  if (radicand) {
    lambda = *radicand;
    std::optional<BigRational> again;
    branches = expand(lambda, again);
  }
  if (branches.empty()) throw UnsupportedBranch("no branch with expansion in powers of (1 - z/rho)^(1/2)");

  // compare candidates with the series near (1 - z/rho) = 1/16
  const BigRational u0 = simplest_rational(BigRational::from_decimal(std::to_string(0.249 / std::sqrt(lambda.to_double()))),
                                           BigRational::from_decimal(std::to_string(0.251 / std::sqrt(lambda.to_double()))));
  const BigRational target = partial_sum(series, rho * (kOne - lambda * u0 * u0));
  std::vector<std::pair<BigRational, std::size_t>> d2;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    BigRational v = 0;
    for (std::size_t k = branches[i].y.size(); k-- > 0;) v = v * u0 + branches[i].y[k];
    d2.emplace_back(abs(*t0 + v - target), i);
  }
  std::sort(d2.begin(), d2.end());
  if (d2.size() > 1 && d2[1].first < d2[0].first * BigRational(4)) {
    throw BranchSelectionAmbiguous("two Puiseux branches are equally close to the series");
  }
  const Branch& b = branches[d2[0].second];
  SingularExpansion e;
  e.rho = rho;
  e.terms.push_back({kZero, *t0});
  // u^k = (1 - z/rho)^{k/2} lambda^{-k/2}
  const BigRational lp(lambda.numerator()), lq(lambda.denominator());
  for (std::size_t k = 1; k < b.y.size(); ++k) {
    if (b.y[k].is_zero()) continue;
    const auto half = static_cast<unsigned>(k / 2);
    SingularTerm term{BigRational(static_cast<long>(k)) / BigRational(2), b.y[k] / pow(lambda, half)};
    if (k % 2 == 1 && !(lambda == kOne)) {
      // 1/sqrt(p/q) = sqrt(p q) / p
      term.coeff /= lp;
      term.radicand = lp * lq;
      simplify_sqrt(term.coeff, term.radicand);
    }
    e.terms.push_back(term);
  }
  return e;
}

AsymptoticForm transfer(const BigRational& coeff, const BigRational& exponent, const BigRational& rho,
                        const BigRational& radicand) {
  AsymptoticForm f;
  f.c = coeff;
  f.radicand = radicand;
  f.alpha = -exponent;
  f.rho = rho;
  const BigRational twice = f.alpha * BigRational(2);
  if (!twice.is_integer()) throw UnsupportedExponent("exponent must be a multiple of 1/2");
  if (f.alpha.is_integer()) {
    if (f.alpha.sign() <= 0) throw UnsupportedExponent("Gamma has a pole at " + f.alpha.to_string());
    BigRational g = 1;
    for (long k = 1; BigRational(k) < f.alpha; ++k) g *= BigRational(k);
    f.constant = coeff / g;
    f.over_sqrt_pi = false;
    return f;
  }
  // Gamma(alpha) = g sqrt(pi)
  BigRational g = 1;
  for (BigRational x = kHalf; x < f.alpha; x += kOne) g *= x;
  for (BigRational x = kHalf; x > f.alpha; x -= kOne) g /= (x - kOne);
  f.constant = coeff / g;
  f.over_sqrt_pi = true;
  return f;
}

AsymptoticForm transfer(const SingularExpansion& e) {
  const auto t = e.dominant_singular_term();
  if (!t) throw UnsupportedExponent("expansion has no singular term");
  return transfer(t->coeff, t->exponent, e.rho, t->radicand);
}

double SingularTerm::value() const { return coeff.to_double() * std::sqrt(radicand.to_double()); }

double AsymptoticForm::constant_value() const {
  const double v = constant.to_double() * std::sqrt(radicand.to_double());
  return over_sqrt_pi ? v / std::sqrt(M_PI) : v;
}

std::string AsymptoticForm::describe() const {
  std::ostringstream os;
  os << constant.to_string();
  if (!(radicand == BigRational(1))) os << "*sqrt(" << radicand.to_string() << ")";
  os << (over_sqrt_pi ? "/sqrt(pi)" : "") << " * n^(" << n_exponent().to_string()
     << ") * (" << growth().to_string() << ")^n";
  return os.str();
}

GrowthEstimate growth_from_coefficients(const QSeries& s, std::size_t window, double exponent) {
  std::size_t nonzero = 0;
  for (const auto& c : s.coeffs()) nonzero += c.is_zero() ? 0 : 1;
  if (nonzero < 40) throw InsufficientData("growth estimate needs at least 40 nonzero coefficients");
  GrowthEstimate g;
  g.lo = HUGE_VAL;
  g.hi = -HUGE_VAL;
  for (std::size_t n = s.order(); n-- > 1 && g.used < window;) {
    if (s[n].is_zero() || s[n - 1].is_zero()) continue;
    const double r = (s[n] / s[n - 1]).to_double();
    const double est = r * std::pow(static_cast<double>(n) / static_cast<double>(n - 1), -exponent);
    if (g.used == 0) g.estimate = est;
    g.lo = std::min(g.lo, est);
    g.hi = std::max(g.hi, est);
    ++g.used;
  }
  if (g.used == 0) throw InsufficientData("no consecutive nonzero coefficients");
  return g;
}

DominantSingularity dominant_singularity(const AlgebraicCurve& c, const QSeries& s, const BigRational& width,
                                         const BigRational& lo, const BigRational& hi) {
  DominantSingularity d;
  d.estimate = growth_from_coefficients(s);
  const QPoly disc = discriminant_z(c) * c.p.back();
  d.candidates = isolate_real_roots(disc, lo, hi);
  if (d.candidates.empty()) throw NoRootInInterval("no singularity candidate in (" + lo.to_string() + ", " + hi.to_string() + "]");
  const double target = 1.0 / d.estimate.estimate;
  std::size_t best = 0;
  for (std::size_t i = 0; i < d.candidates.size(); ++i) {
    d.candidates[i].refine(BigRational(1, 1 << 20));
    if (std::abs(d.candidates[i].approx() - target) < std::abs(d.candidates[best].approx() - target)) best = i;
  }
  d.root = d.candidates[best];
  d.exact = d.root.as_rational();
  if (d.exact) {
    d.root.lo = d.root.hi = *d.exact;
  }
  for (;;) {
    if (d.root.lo.sign() > 0) {
      d.growth = {kOne / d.root.hi, kOne / d.root.lo};
      if (d.growth.width() <= width) break;
    }
    d.root.refine((d.root.hi - d.root.lo) / BigRational(2));
  }
  return d;
}

std::vector<BigRational> simple_rational_roots_at_origin(const AlgebraicCurve& c) {
  const QPoly p0 = c.at_z(kZero);
  const QPoly d0 = p0.derivative();
  std::vector<BigRational> out;
  if (p0.is_zero()) return out;
  // rational root theorem on the integer-scaled polynomial
  mpz_class den(1);
  for (std::size_t i = 0; i < p0.size(); ++i) den = lcm(den, p0.coeff(i).denominator());
  std::vector<mpz_class> a;
  for (std::size_t i = 0; i < p0.size(); ++i) a.push_back((p0.coeff(i) * BigRational(den)).numerator());
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low == 1 && !d0(kZero).is_zero()) out.push_back(kZero);
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> ds;
    for (mpz_class k = 1; k * k <= v; ++k) {
      if (v % k == 0) {
        ds.push_back(k);
        if (k * k != v) ds.push_back(v / k);
      }
    }
    return ds;
  };
  if (abs(a[low]) > 1000000 || abs(a.back()) > 1000000) return out;
  for (const auto& num : divisors(a[low])) {
    for (const auto& dd : divisors(a.back())) {
      for (int sg : {1, -1}) {
        const BigRational r(mpz_class(sg * num), dd);
        if (p0(r).is_zero() && !d0(r).is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BigRational& x, const BigRational& y) { return abs(x) < abs(y); });
  return out;
}

QSeries series_from_curve(const AlgebraicCurve& c, const BigRational& t0, std::size_t order) {
  const QPoly p0 = c.at_z(kZero);
  if (!p0(t0).is_zero() || p0.derivative()(t0).is_zero()) {
    throw UnsupportedBranch("T(0) = " + t0.to_string() + " is not a simple root of P(0, T)");
  }
  AlgebraicCurve dc;
  for (std::size_t i = 1; i < c.p.size(); ++i) dc.p.push_back(c.p[i] * BigRational(static_cast<long>(i)));
  QSeries t = QSeries::monomial(t0, 0, order);
  // each step doubles the number of correct coefficients
  for (std::size_t good = 1; good < order; good *= 2) {
    t = t - c.residual(t) * inverse(dc.residual(t));
  }
  if (c.residual(t).valuation() < order) throw ConsistencyFailure("Newton iteration did not converge");
  return t;
}

}  // namespace mapcount
