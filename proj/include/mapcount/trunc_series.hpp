#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mapcount/errors.hpp"

namespace mapcount {

/// Power series in z truncated at order N: the coefficients of z^0..z^{N-1}
/// are known exactly, everything from z^N on is unknown.
///
/// R must provide +, -, *, construction from int, and ADL functions
/// is_zero(const R&) and unit_inverse(const R&) -> std::optional<R>.
template <class R>
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {}
  TruncSeries(std::size_t order, const R& constant) : c_(order, R(0)) {
    if (order > 0) c_[0] = constant;
  }

  static TruncSeries zero(std::size_t order) { return TruncSeries(std::vector<R>(order, R(0))); }
  static TruncSeries one(std::size_t order) { return TruncSeries(order, R(1)); }
  /// The series z (or c*z^k) at the given order.
  static TruncSeries monomial(const R& c, std::size_t k, std::size_t order) {
    TruncSeries s = zero(order);
    if (k < order) s.c_[k] = c;
    return s;
  }
  static TruncSeries var(std::size_t order) { return monomial(R(1), 1, order); }

  std::size_t order() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t n) const { return c_[n]; }
  R& operator[](std::size_t n) { return c_[n]; }
  /// Coefficient of z^n; throws if n is beyond the truncation order.
  const R& at(std::size_t n) const {
    if (n >= c_.size()) {
      throw BadValuation("coefficient z^" + std::to_string(n) + " beyond order " +
                         std::to_string(c_.size()));
    }
    return c_[n];
  }

  /// Index of the first nonzero coefficient, or order() if none is known.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!is_zero(c_[i])) return i;
    }
    return c_.size();
  }

  TruncSeries truncated(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// Multiplication by z^k (the order grows by k).
  TruncSeries shifted(std::size_t k) const {
    std::vector<R> d(k, R(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return TruncSeries(std::move(d));
  }

  /// Exact division by z^k; throws DivisibilityError if a low coefficient is nonzero.
  TruncSeries unshifted(std::size_t k) const {
    if (k > c_.size()) throw DivisibilityError("division by z^" + std::to_string(k) + " beyond order");
    for (std::size_t i = 0; i < k; ++i) {
      if (!is_zero(c_[i])) {
        throw DivisibilityError("series not divisible by z^" + std::to_string(k) +
                                " (coefficient of z^" + std::to_string(i) + " is nonzero)");
      }
    }
    return TruncSeries(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Applies fn to each coefficient (fn must be a ring map or at least additive).
  template <class Fn>
  auto map(Fn&& fn) const {
    using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(fn(x));
    return TruncSeries<S>(std::move(out));
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  TruncSeries& operator+=(const TruncSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries& operator*=(const R& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const R& s) { return a *= s; }
  friend TruncSeries operator*(const R& s, TruncSeries a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }

  /// Cauchy product. The result is known up to min(Na + vb, Nb + va), capped at
  /// the larger operand order.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t va = a.valuation(), vb = b.valuation();
    const std::size_t n = std::min({a.order() + vb, b.order() + va, std::max(a.order(), b.order())});
    std::vector<R> out(n, R(0));
    for (std::size_t i = va; i < std::min(n, a.order()); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = vb; i + j < n && j < b.order(); ++j) {
        if (is_zero(b.c_[j])) continue;
        mul_acc(out[i + j], a.c_[i], b.c_[j]);
      }
    }
    return TruncSeries(std::move(out));
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

 private:
  static void mul_acc(R& acc, const R& x, const R& y) {
    if constexpr (requires { mul_add(acc, x, y); }) {
      mul_add(acc, x, y);
    } else {
      acc += x * y;
    }
  }

  std::vector<R> c_;
};

/// True when a and b agree on their common known coefficients.
template <class R>
bool agree(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

/// Multiplicative inverse; the constant term must be a unit of R.
template <class R>
TruncSeries<R> inverse(const TruncSeries<R>& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  const auto inv0 = unit_inverse(a[0]);
  if (!inv0) throw NonUnitConstantTerm("constant term is not a unit");
  std::vector<R> b(n, R(0));
  b[0] = *inv0;
  for (std::size_t k = 1; k < n; ++k) {
    R acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (!is_zero(a[j])) acc += a[j] * b[k - j];
    }
    b[k] = -(*inv0 * acc);
  }
  return TruncSeries<R>(std::move(b));
}

/// f / g, where g's constant term is a unit.
template <class R>
TruncSeries<R> divide(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  return f * inverse(g);
}

/// Composition f(g(z)); g must have zero constant term.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  if (g.order() > 0 && !is_zero(g[0])) throw NonzeroConstantTerm("inner series has nonzero constant term");
  const std::size_t vf = f.valuation();
  const std::size_t vg = g.valuation();
  const std::size_t nf = f.order(), ng = g.order();
  std::size_t n = std::min(nf * vg, ng + (std::max<std::size_t>(vf, 1) - 1) * vg);
  n = std::min(n, std::max(nf, ng));
  if (n == 0) return TruncSeries<R>::zero(0);
  const TruncSeries<R> gt = g.truncated(n);
  TruncSeries<R> acc = TruncSeries<R>::zero(n);
  for (std::size_t k = nf; k-- > 0;) {
    acc = (acc * gt).truncated(n);
    if (acc.order() < n) {
      std::vector<R> c = acc.coeffs();
      c.resize(n, R(0));
      acc = TruncSeries<R>(std::move(c));
    }
    acc[0] += f[k];
  }
  return acc;
}

/// Compositional inverse g with f(g(z)) = z, by undetermined coefficients.
/// Column n of the power table g^k only involves g_1..g_{n-1} for k >= 2, so
/// g_n = -(sum_{k>=2} f_k [z^n] g^k) / f_1.
template <class R>
TruncSeries<R> reversion(const TruncSeries<R>& f) {
  const std::size_t n = f.order();
  if (n < 2 || !is_zero(f[0])) throw BadValuation("reversion needs f(0) = 0 and a known linear term");
  const auto inv1 = unit_inverse(f[1]);
  if (!inv1) throw BadValuation("linear coefficient is not a unit");
  std::vector<R> g(n, R(0));
  // pow[k][m] = [z^m] g^k for 1 <= k < n
  std::vector<std::vector<R>> pow(n, std::vector<R>(n, R(0)));
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t k = 2; k <= m; ++k) {
      R acc(0);
      for (std::size_t j = 1; j + (k - 1) <= m; ++j) {
        if (!is_zero(g[j]) && !is_zero(pow[k - 1][m - j])) acc += g[j] * pow[k - 1][m - j];
      }
      pow[k][m] = std::move(acc);
    }
    if (m == 1) {
      g[1] = *inv1;
    } else {
      R acc(0);
      for (std::size_t k = 2; k <= m; ++k) {
        if (!is_zero(f[k])) acc += f[k] * pow[k][m];
      }
      g[m] = -(*inv1 * acc);
    }
    pow[1][m] = g[m];
  }
  return TruncSeries<R>(std::move(g));
}

/// Solves the system X = F(X) order by order, starting from X = 0 at the given
/// order. Each round fixes one more coefficient of every unknown; if a
/// coefficient that was already fixed changes, the system is not triangular.
template <class R>
std::vector<TruncSeries<R>> solve_triangular(
    const std::function<std::vector<TruncSeries<R>>(const std::vector<TruncSeries<R>>&)>& F,
    std::size_t unknowns, std::size_t order) {
  std::vector<TruncSeries<R>> x(unknowns, TruncSeries<R>::zero(order));
  for (std::size_t n = 0; n <= order; ++n) {
    const auto y = F(x);
    if (y.size() != unknowns) throw NotTriangular("system returned the wrong number of series");
    for (std::size_t u = 0; u < unknowns; ++u) {
      if (y[u].order() < std::min(order, n + 1)) {
        throw NotTriangular("right-hand side lost precision at order " + std::to_string(n));
      }
      for (std::size_t k = 0; k < std::min(n, order); ++k) {
        if (!(y[u][k] == x[u][k])) {
          throw NotTriangular("coefficient z^" + std::to_string(k) + " of unknown " +
                              std::to_string(u) + " changed after being fixed");
        }
      }
      if (n < order) x[u][n] = y[u][n];
    }
  }
  return x;
}

/// Single-unknown form of solve_triangular.
template <class R>
TruncSeries<R> solve_triangular(const std::function<TruncSeries<R>(const TruncSeries<R>&)>& F,
                                std::size_t order) {
  using Vec = std::vector<TruncSeries<R>>;
  const auto out = solve_triangular<R>(
      std::function<Vec(const Vec&)>([&](const Vec& x) { return Vec{F(x[0])}; }), 1, order);
  return out[0];
}

}  // namespace mapcount
