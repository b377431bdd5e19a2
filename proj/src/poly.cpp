#include "mapcount/poly.hpp"

namespace mapcount {

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    const mpz_class n = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  BigRational scale(den_lcm, num_gcd);
  if (p.leading().sign() < 0) scale = -scale;
  return p * scale;
}

Poly<ModP> to_modp(const QPoly& p) {
  std::vector<ModP> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(to_modp(x));
  return Poly<ModP>(std::move(c));
}

std::string format_poly(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const BigRational& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const BigRational a = abs(c);
    if (k == 0 || !(a == BigRational(1))) out += a.to_string() + (k == 0 ? "" : "*");
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace mapcount
