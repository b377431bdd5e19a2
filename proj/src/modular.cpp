#include "mapcount/modular.hpp"

namespace mapcount {

namespace {

constexpr std::uint32_t kPrimeCeiling = 1u << 28;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

ModP ModP::inverse() const {
  if (v_ == 0) throw DivisionError("inverse of zero residue");
  return from_raw(pow_mod(v_, modulus() - 2, modulus()));
}

std::vector<std::uint32_t> kernel_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint32_t n = kPrimeCeiling - 1; out.size() < count; n -= 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::size_t primes_for_bound(const mpz_class& bound) {
  const mpz_class target = 2 * abs(bound) + 1;
  mpz_class product = 1;
  std::size_t count = 0;
  for (const std::uint32_t p : kernel_primes(512)) {
    if (product > target) break;
    product *= p;
    ++count;
  }
  return count;
}

ModP to_modp(const BigRational& r) {
  const std::uint32_t p = ModP::modulus();
  const auto num = static_cast<std::uint32_t>(mpz_fdiv_ui(r.value().get_num_mpz_t(), p));
  const auto den = static_cast<std::uint32_t>(mpz_fdiv_ui(r.value().get_den_mpz_t(), p));
  if (den == 0) throw DivisionError("denominator vanishes modulo " + std::to_string(p));
  return ModP::from_raw(num) / ModP::from_raw(den);
}

CrtReconstructor::CrtReconstructor(std::vector<std::uint32_t> primes)
    : primes_(std::move(primes)), product_(1) {
  inverse_.resize(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    inverse_[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) {
      inverse_[i][j] = pow_mod(primes_[j] % primes_[i], primes_[i] - 2, primes_[i]);
    }
    product_ *= primes_[i];
  }
  half_ = product_ / 2;
}

mpz_class CrtReconstructor::nonnegative(std::span<const std::uint32_t> residues) const {
  const std::size_t k = primes_.size();
  std::vector<std::uint64_t> digits(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t p = primes_[i];
    std::uint64_t x = residues[i] % p;
    for (std::size_t j = 0; j < i; ++j) {
      x = (x + p - digits[j] % p) % p * inverse_[i][j] % p;
    }
    digits[i] = x;
  }
  mpz_class out = 0;
  for (std::size_t i = k; i-- > 0;) {
    out *= primes_[i];
    out += static_cast<unsigned long>(digits[i]);
  }
  return out;
}

mpz_class CrtReconstructor::symmetric(std::span<const std::uint32_t> residues) const {
  mpz_class x = nonnegative(residues);
  if (x > half_) x -= product_;
  return x;
}

std::optional<BigRational> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return BigRational(r1, t1);
}

}  // namespace mapcount
