#pragma once

#include <string>

#include <json.hpp>

#include "mapcount/poly.hpp"
#include "mapcount/trunc_series.hpp"

namespace mapcount {

using Json = nlohmann::ordered_json;

/// {"nu": ["a0/b0", ...]} with index = power of nu.
Json poly_nu_to_json(const PolyNu& p);
PolyNu poly_nu_from_json(const Json& j);

/// {"var": v, "order": N, "coeffs": ["a/b", ...]}
Json series_to_json(const TruncSeries<BigRational>& s, const std::string& var = "z");
/// Same layout with each coefficient written as {"nu": [...]}.
Json series_to_json(const TruncSeries<PolyNu>& s, const std::string& var = "z");

/// Reads either layout; rational coefficients become constant polynomials.
TruncSeries<PolyNu> series_nu_from_json(const Json& j);
/// Reads a series whose coefficients are all plain rationals (or constant
/// polynomials in nu).
TruncSeries<BigRational> series_q_from_json(const Json& j);

}  // namespace mapcount
