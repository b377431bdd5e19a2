#pragma once

#include <random>
#include <vector>

#include "mapcount/poly.hpp"
#include "mapcount/trunc_series.hpp"

namespace mapcount::test {

using QSeries = TruncSeries<BigRational>;
using NuSeries = TruncSeries<PolyNu>;

inline QSeries qs(const std::vector<long>& c) {
  std::vector<BigRational> v(c.begin(), c.end());
  return QSeries(std::move(v));
}

inline PolyNu nu(const std::vector<long>& c) {
  std::vector<BigRational> v(c.begin(), c.end());
  return PolyNu(std::move(v));
}

inline NuSeries nus(const std::vector<PolyNu>& c) { return NuSeries(c); }

inline BigRational random_rational(std::mt19937_64& rng, long range = 9) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 4);
  return BigRational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline QSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<BigRational> c;
  for (std::size_t i = 0; i < order; ++i) c.push_back(random_rational(rng));
  return QSeries(std::move(c));
}

inline PolyNu random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<BigRational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
  return PolyNu(std::move(c));
}

}  // namespace mapcount::test
