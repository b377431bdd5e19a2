#include "mapcount/series_json.hpp"

namespace mapcount {

namespace {

BigRational rational_from_json(const Json& j) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t declared_order(const Json& j) {
  const Json& order = field(j, "order");
  const Json& coeffs = field(j, "coeffs");
  if (!order.is_number_unsigned() && !order.is_number_integer()) throw ParseError("order must be an integer");
  if (!coeffs.is_array()) throw ParseError("coeffs must be an array");
  const auto n = order.get<long long>();
  if (n < 0 || static_cast<std::size_t>(n) != coeffs.size()) {
    throw ParseError("order " + std::to_string(n) + " does not match " + std::to_string(coeffs.size()) +
                     " coefficients");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

Json poly_nu_to_json(const PolyNu& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return Json{{"nu", arr}};
}

PolyNu poly_nu_from_json(const Json& j) {
  if (!j.is_object()) return PolyNu(rational_from_json(j));
  const Json& arr = field(j, "nu");
  if (!arr.is_array()) throw ParseError("nu must be an array");
  std::vector<BigRational> c;
  for (const auto& x : arr) c.push_back(rational_from_json(x));
  return PolyNu(std::move(c));
}

Json series_to_json(const TruncSeries<BigRational>& s, const std::string& var) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return Json{{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

Json series_to_json(const TruncSeries<PolyNu>& s, const std::string& var) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(poly_nu_to_json(c));
  return Json{{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

TruncSeries<PolyNu> series_nu_from_json(const Json& j) {
  const std::size_t n = declared_order(j);
  std::vector<PolyNu> c;
  c.reserve(n);
  for (const auto& x : j.at("coeffs")) c.push_back(poly_nu_from_json(x));
  return TruncSeries<PolyNu>(std::move(c));
}

TruncSeries<BigRational> series_q_from_json(const Json& j) {
  const std::size_t n = declared_order(j);
  std::vector<BigRational> c;
  c.reserve(n);
  for (const auto& x : j.at("coeffs")) {
    const PolyNu p = poly_nu_from_json(x);
    if (p.degree() > 0) throw ParseError("coefficient depends on nu where a rational was expected");
    c.push_back(p.coeff(0));
  }
  return TruncSeries<BigRational>(std::move(c));
}

}  // namespace mapcount
