#pragma once

#include <string>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mapcount/big_rational.hpp"
#include "mapcount/modular.hpp"

namespace mapcount {

/// Dense univariate polynomial over a field K, stored without trailing zeros.
/// Used for polynomials in nu (PolyNu), in z (curve coefficients) and in T.
template <class K>
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Poly() = default;
  template <std::integral I>
  Poly(I constant) : Poly(K(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(K constant) {
    if (!kzero(constant)) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(K coeff, std::size_t degree) {
    std::vector<K> c(degree + 1, K(0));
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly variable() { return monomial(K(1), 1); }

  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const { return c_.back(); }

  K operator()(const K& x) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// Multiplication by var^k.
  Poly shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<K> d(k, K(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return Poly(std::move(d));
  }

  /// Exact division by var^k; nullopt if any of the low k coefficients is nonzero.
  std::optional<Poly> checked_unshift(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
      if (!kzero(c_[i])) return std::nullopt;
    }
    if (c_.size() <= k) return Poly{};
    return Poly(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Drops all coefficients of degree >= n.
  Poly truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (kzero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    mul_add(r, a, b);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// acc += a*b without a temporary product.
  friend void mul_add(Poly& acc, const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return;
    const std::size_t n = a.c_.size() + b.c_.size() - 1;
    if (acc.c_.size() < n) acc.c_.resize(n, K(0));
    if constexpr (std::is_same_v<K, ModP>) {
      mul_add_mod(acc.c_, a.c_, b.c_);
    } else {
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (kzero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    acc.trim();
  }

  /// Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionError("polynomial division by zero");
    if (c_.size() < d.c_.size()) return {Poly{}, *this};
    std::vector<K> rem = c_;
    std::vector<K> quo(c_.size() - d.c_.size() + 1, K(0));
    const K inv_lead = K(1) / d.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const K q = rem[k + d.c_.size() - 1] * inv_lead;
      quo[k] = q;
      if (kzero(q)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const {
    if (c_.empty()) return {};
    return *this * (K(1) / leading());
  }

 private:
  static bool kzero(const K& k) {
    using mapcount::is_zero;
    return is_zero(k);
  }
  void trim() {
    while (!c_.empty() && kzero(c_.back())) c_.pop_back();
  }

  static void mul_add_mod(std::vector<ModP>& acc, const std::vector<ModP>& a,
                          const std::vector<ModP>& b) {
    const std::uint64_t p = ModP::modulus();
    const std::size_t n = a.size() + b.size() - 1;
    thread_local std::vector<std::uint64_t> buf;
    buf.assign(n, 0);
    // Products are < 2^56, so 255 of them can be summed before reduction.
    std::size_t pending = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i].value();
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) buf[i + j] += ai * b[j].value();
      if (++pending == 255) {
        for (auto& x : buf) x %= p;
        pending = 0;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      acc[k] += ModP::from_raw(static_cast<std::uint32_t>(buf[k] % p));
    }
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

/// Units of K[v] are the nonzero constants.
template <class K>
std::optional<Poly<K>> unit_inverse(const Poly<K>& p) {
  if (p.size() != 1) return std::nullopt;
  return Poly<K>(K(1) / p.leading());
}

/// Monic greatest common divisor (zero if both are zero).
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), made monic.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  if (p.degree() <= 0) return p.monic();
  const Poly<K> g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

/// Substitution p(q(v)).
template <class K>
Poly<K> compose(const Poly<K>& p, const Poly<K>& q) {
  Poly<K> acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Poly<K>(p.coeff(i));
  return acc;
}

using PolyNu = Poly<BigRational>;
using QPoly = Poly<BigRational>;

/// Integer-coefficient primitive multiple with positive leading coefficient.
QPoly primitive_part(const QPoly& p);

/// Coefficientwise reduction modulo the current prime.
Poly<ModP> to_modp(const QPoly& p);
/// Readable form such as "12 + 45*nu + 66*nu^2".
std::string format_poly(const QPoly& p, const std::string& var = "nu");

}  // namespace mapcount
