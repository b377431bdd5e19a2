#include "mapcount/catalytic_poly.hpp"

#include <algorithm>

namespace mapcount {

CatalyticPoly CatalyticPoly::from_unsorted(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  CatalyticPoly out;
  for (auto& term : t) {
    if (!out.terms_.empty() && out.terms_.back().first == term.first) {
      out.terms_.back().second += term.second;
    } else {
      if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(term));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
  return out;
}

template <class Fn>
CatalyticPoly CatalyticPoly::transform(Fn&& fn) const {
  std::vector<Term> t;
  for (const auto& [k, c] : terms_) fn(unpack(k), c, t);
  return from_unsorted(std::move(t));
}

CatalyticPoly CatalyticPoly::monomial(const BigRational& c, Exponent e) {
  CatalyticPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(pack(e), c);
  return p;
}

CatalyticPoly CatalyticPoly::from_nu(const PolyNu& p) {
  CatalyticPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.coeff(i).is_zero()) out.terms_.emplace_back(i, p.coeff(i));
  }
  return out;
}

BigRational CatalyticPoly::coeff(Exponent e) const {
  const auto key = pack(e);
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, std::uint64_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return BigRational(0);
}

std::uint32_t CatalyticPoly::degree_x() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, unpack(t.first).x);
  return d;
}
std::uint32_t CatalyticPoly::degree_y() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, unpack(t.first).y);
  return d;
}
std::uint32_t CatalyticPoly::degree_nu() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, unpack(t.first).nu);
  return d;
}

CatalyticPoly CatalyticPoly::operator-() const {
  CatalyticPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CatalyticPoly& CatalyticPoly::operator+=(const CatalyticPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigRational s = a->second + b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

CatalyticPoly& CatalyticPoly::operator-=(const CatalyticPoly& o) { return *this += -o; }

CatalyticPoly& CatalyticPoly::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

CatalyticPoly operator*(const CatalyticPoly& a, const CatalyticPoly& b) {
  std::vector<CatalyticPoly::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  // Exponent fields never overflow into each other for the degrees used here.
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) t.emplace_back(ka + kb, ca * cb);
  }
  return CatalyticPoly::from_unsorted(std::move(t));
}

CatalyticPoly CatalyticPoly::shifted(Exponent by) const {
  CatalyticPoly r = *this;
  const auto k = pack(by);
  for (auto& t : r.terms_) t.first += k;
  return r;
}

CatalyticPoly CatalyticPoly::at_x1() const {
  return transform([](Exponent e, const BigRational& c, std::vector<Term>& out) {
    out.emplace_back(pack({0, e.y, e.nu}), c);
  });
}

CatalyticPoly CatalyticPoly::at_y1() const {
  return transform([](Exponent e, const BigRational& c, std::vector<Term>& out) {
    out.emplace_back(pack({e.x, 0, e.nu}), c);
  });
}

CatalyticPoly CatalyticPoly::divided_difference_x() const {
  return transform([](Exponent e, const BigRational& c, std::vector<Term>& out) {
    for (std::uint32_t j = 0; j < e.x; ++j) out.emplace_back(pack({j, e.y, e.nu}), c);
  });
}

CatalyticPoly CatalyticPoly::divided_difference_y() const {
  return transform([](Exponent e, const BigRational& c, std::vector<Term>& out) {
    for (std::uint32_t j = 0; j < e.y; ++j) out.emplace_back(pack({e.x, j, e.nu}), c);
  });
}

CatalyticPoly CatalyticPoly::dy_at_1() const {
  return transform([](Exponent e, const BigRational& c, std::vector<Term>& out) {
    if (e.y > 0) out.emplace_back(pack({e.x, 0, e.nu}), c * BigRational(e.y));
  });
}

CatalyticPoly CatalyticPoly::dx_at_1() const {
  return transform([](Exponent e, const BigRational& c, std::vector<Term>& out) {
    if (e.x > 0) out.emplace_back(pack({0, e.y, e.nu}), c * BigRational(e.x));
  });
}

PolyNu CatalyticPoly::at_xy1() const {
  std::vector<BigRational> c(degree_nu() + 1, BigRational(0));
  for (const auto& [k, v] : terms_) c[unpack(k).nu] += v;
  return PolyNu(std::move(c));
}

CatalyticPoly CatalyticPoly::at_nu(const BigRational& v) const {
  return transform([&v](Exponent e, const BigRational& c, std::vector<Term>& out) {
    out.emplace_back(pack({e.x, e.y, 0}), c * pow(v, e.nu));
  });
}

std::ostream& operator<<(std::ostream& os, const CatalyticPoly& p) {
  if (p.terms_.empty()) return os << "0";
  bool first = true;
  for (const auto& [k, c] : p.terms_) {
    const auto e = CatalyticPoly::unpack(k);
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e.x) os << "*x^" << e.x;
    if (e.y) os << "*y^" << e.y;
    if (e.nu) os << "*nu^" << e.nu;
  }
  return os;
}

std::optional<CatalyticPoly> unit_inverse(const CatalyticPoly& p) {
  if (p.terms().size() != 1 || p.terms()[0].first != 0) return std::nullopt;
  return CatalyticPoly(BigRational(1) / p.terms()[0].second);
}

}  // namespace mapcount
