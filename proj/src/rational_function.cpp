#include "mapcount/rational_function.hpp"

namespace mapcount {

RationalFunctionNu::RationalFunctionNu(PolyNu num, PolyNu den) {
  if (den.is_zero()) throw DivisionError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = PolyNu(1);
    return;
  }
  const PolyNu g = gcd(num, den);
  num_ = num.divmod(g).first;
  den_ = den.divmod(g).first;
  const BigRational lead = den_.leading();
  num_ *= BigRational(1) / lead;
  den_ *= BigRational(1) / lead;
}

std::optional<PolyNu> RationalFunctionNu::as_poly() const {
  if (den_.degree() != 0) return std::nullopt;
  return num_;
}

BigRational RationalFunctionNu::operator()(const BigRational& nu) const { return num_(nu) / den_(nu); }

RationalFunctionNu operator/(const RationalFunctionNu& a, const RationalFunctionNu& b) {
  if (b.is_zero()) throw DivisionError("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace mapcount
