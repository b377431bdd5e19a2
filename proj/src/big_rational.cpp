#include "mapcount/big_rational.hpp"

#include <cctype>

namespace mapcount {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty integer in '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  if (i == text.size()) throw ParseError("bad integer '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("bad integer '" + std::string(whole) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(s, 10);
}

}  // namespace

BigRational::BigRational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DivisionError("zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return BigRational(num, den);
}

BigRational BigRational::from_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse(text);
  std::string_view mant = text;
  long exp10 = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    exp10 = parse_integer(text.substr(e + 1), text).get_si();
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    i = 1;
  }
  long frac = 0;
  bool seen_point = false;
  for (; i < mant.size(); ++i) {
    const char c = mant[i];
    if (c == '.') {
      if (seen_point) throw ParseError("bad decimal '" + std::string(text) + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac;
    } else {
      throw ParseError("bad decimal '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw ParseError("bad decimal '" + std::string(text) + "'");
  mpz_class n(digits, 10);
  if (negative) n = -n;
  exp10 -= frac;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? BigRational(n, scale) : BigRational(mpz_class(n * scale));
}

std::string BigRational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = q_.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q_.get_den().get_mpz_t());
  const bool negative = sgn(q_) < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + s : s;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

BigRational pow(const BigRational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return BigRational(n, d);
}

BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

mpz_class floor(const BigRational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
  return out;
}

}  // namespace mapcount
