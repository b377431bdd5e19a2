#include "mapcount/interval.hpp"

namespace mapcount {

namespace {

std::string decimal_rounded(const BigRational& v, int digits, bool up) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigRational scaled = v * BigRational(scale);
  mpz_class n = floor(scaled);
  if (up && !(BigRational(n) == scaled)) n += 1;
  return BigRational(n, scale).to_decimal(digits);
}

}  // namespace

std::string Interval::to_decimal(int digits) const {
  return "[" + decimal_rounded(lo, digits, false) + ", " + decimal_rounded(hi, digits, true) + "]";
}

Interval intersect(const Interval& a, const Interval& b) {
  const Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.hi < r.lo) throw NoRootInInterval("empty interval intersection");
  return r;
}

Interval eval(const QPoly& p, const Interval& x) {
  Interval acc = Interval::point(BigRational(0));
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Interval::point(p.coeff(i));
  return acc;
}

}  // namespace mapcount
