#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mapcount/big_rational.hpp"

namespace mapcount {

namespace detail {
inline thread_local std::uint32_t g_modulus = 0;
}

/// Residue modulo the prime installed on the current thread by a PrimeScope.
/// Kernel primes are below 2^28 so that sums of up to 255 raw products fit in
/// 64 bits without reduction.
class ModP {
 public:
  ModP() = default;
  template <std::integral I>
  ModP(I v) {  // NOLINT(google-explicit-constructor)
    const auto p = static_cast<std::int64_t>(modulus());
    std::int64_t r = static_cast<std::int64_t>(v) % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }
  static ModP from_raw(std::uint32_t r) {
    ModP m;
    m.v_ = r;
    return m;
  }
  static std::uint32_t modulus() { return detail::g_modulus; }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
  ModP& operator+=(ModP o) {
    std::uint32_t s = v_ + o.v_;
    if (s >= modulus()) s -= modulus();
    v_ = s;
    return *this;
  }
  ModP& operator-=(ModP o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  ModP& operator*=(ModP o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % modulus());
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }
  ModP inverse() const;

  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

 private:
  std::uint32_t v_ = 0;
};

inline bool is_zero(ModP r) { return r.is_zero(); }
inline std::optional<ModP> unit_inverse(ModP r) {
  if (r.is_zero()) return std::nullopt;
  return r.inverse();
}

/// Installs a modulus for ModP arithmetic on this thread for the scope's lifetime.
class PrimeScope {
 public:
  explicit PrimeScope(std::uint32_t p) : saved_(detail::g_modulus) { detail::g_modulus = p; }
  ~PrimeScope() { detail::g_modulus = saved_; }
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  std::uint32_t saved_;
};

/// The first `count` primes below 2^28, in decreasing order.
std::vector<std::uint32_t> kernel_primes(std::size_t count);

/// Number of kernel primes whose product exceeds 2*bound (symmetric range).
std::size_t primes_for_bound(const mpz_class& bound);

/// Reduces a rational modulo the current prime; throws DivisionError if the
/// denominator vanishes there.
ModP to_modp(const BigRational& r);

/// Garner-style Chinese remaindering onto the symmetric range (-M/2, M/2].
class CrtReconstructor {
 public:
  explicit CrtReconstructor(std::vector<std::uint32_t> primes);
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  const mpz_class& modulus() const { return product_; }
  mpz_class symmetric(std::span<const std::uint32_t> residues) const;
  mpz_class nonnegative(std::span<const std::uint32_t> residues) const;

 private:
  std::vector<std::uint32_t> primes_;
  std::vector<std::vector<std::uint32_t>> inverse_;  // inverse_[i][j] = p_j^{-1} mod p_i, j < i
  mpz_class product_;
  mpz_class half_;
};

/// Rational reconstruction of a modulo m with |num|, den <= sqrt(m/2).
std::optional<BigRational> rational_reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace mapcount
