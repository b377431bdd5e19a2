#include "mapcount/catalytic_kernel.hpp"

#include <omp.h>

#include <algorithm>

namespace mapcount {

namespace {

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

std::uint32_t mulm(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

}  // namespace

KernelSlices catalytic_kernel_point(std::size_t order, std::uint32_t nu0) {
  const std::uint32_t p = ModP::modulus();
  nu0 %= p;
  KernelSlices out;
  if (order == 0) return out;
  // M[n] is (2n+1) x (2n+1), entry [a][b] = coefficient of x^a y^b
  std::vector<std::vector<std::uint32_t>> M(order), row(order), col(order);
  M[0] = {1};
  row[0] = {1};
  col[0] = {1};
  std::vector<std::uint64_t> p1, p2;
  const std::uint32_t one_plus = addm(1, nu0, p);
  const std::uint32_t one_minus = subm(1, nu0, p);
  const std::uint32_t nu_minus = subm(nu0, 1, p);
  for (std::size_t n = 1; n < order; ++n) {
    const std::size_t t = 2 * n;  // T has indices 0..2n-1 in x and y
    p1.assign(t * t, 0);
    p2.assign(t * t, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - 1 - i;
      const std::size_t wi = 2 * i + 1, wj = 2 * j + 1;
      const std::uint32_t* mi = M[i].data();
      const std::uint32_t* rj = row[j].data();
      const std::uint32_t* cj = col[j].data();
      // each target cell receives at most wj <= 2*order products per i
      for (std::size_t a = 0; a < wi; ++a) {
        for (std::size_t b = 0; b < wi; ++b) {
          const std::uint64_t m = mi[a * wi + b];
          if (m == 0) continue;
          std::uint64_t* d1 = &p1[a * t + b];
          for (std::size_t k = 0; k < wj; ++k) d1[k] += m * rj[k];
          std::uint64_t* d2 = &p2[a * t + b];
          for (std::size_t k = 0; k < wj; ++k) d2[k * t] += m * cj[k];
        }
      }
      const std::size_t span = wi + wj - 1;
      for (std::size_t a = 0; a < span; ++a) {
        for (std::size_t b = 0; b < span; ++b) {
          p1[a * t + b] %= p;
          p2[a * t + b] %= p;
        }
      }
    }
    const std::vector<std::uint32_t>& prev = M[n - 1];
    const std::size_t wp = 2 * n - 1;
    // suffix sums of the previous coefficient in x and in y
    std::vector<std::uint32_t> ddx(wp * wp), ddy(wp * wp);
    for (std::size_t b = 0; b < wp; ++b) {
      std::uint32_t run = 0;
      for (std::size_t a = wp; a-- > 0;) {
        run = addm(run, prev[a * wp + b], p);
        ddx[a * wp + b] = run;
      }
    }
    for (std::size_t a = 0; a < wp; ++a) {
      std::uint32_t run = 0;
      for (std::size_t b = wp; b-- > 0;) {
        run = addm(run, prev[a * wp + b], p);
        ddy[a * wp + b] = run;
      }
    }
    const std::size_t w = 2 * n + 1;
    std::vector<std::uint32_t> mn(w * w, 0);
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        std::uint64_t v = static_cast<std::uint64_t>(one_minus) * p1[a * t + b] % p;
        if (b > 0) v += static_cast<std::uint64_t>(one_plus) * p1[a * t + b - 1] % p;
        if (a > 0) v += static_cast<std::uint64_t>(nu0) * p2[(a - 1) * t + b] % p;
        v += p - p2[a * t + b];
        if (a < wp && b < wp) {
          v += static_cast<std::uint64_t>(nu_minus) * ddx[a * wp + b] % p;
          v += ddy[a * wp + b];
        }
        mn[(a + 1) * w + (b + 1)] = static_cast<std::uint32_t>(v % p);
      }
    }
    row[n].assign(w, 0);
    col[n].assign(w, 0);
    for (std::size_t a = 0; a < w; ++a) {
      for (std::size_t b = 0; b < w; ++b) {
        const std::uint32_t m = mn[a * w + b];
        row[n][b] = addm(row[n][b], m, p);
        col[n][a] = addm(col[n][a], m, p);
      }
    }
    M[n] = std::move(mn);
  }
  for (std::size_t n = 0; n < order; ++n) {
    const std::size_t w = 2 * n + 1;
    std::uint32_t total = 0, sy = 0, sx = 0;
    for (std::size_t k = 0; k < w; ++k) {
      total = addm(total, row[n][k], p);
      sy = addm(sy, mulm(k, row[n][k], p), p);
      sx = addm(sx, mulm(k, col[n][k], p), p);
    }
    out.m11.push_back(total);
    out.dy.push_back(sy);
    out.dx.push_back(sx);
  }
  return out;
}

std::vector<std::uint32_t> interpolate_mod(const std::vector<std::uint32_t>& points,
                                           const std::vector<std::uint32_t>& values) {
  const std::size_t k = points.size();
  std::vector<ModP> x, c;
  for (std::size_t i = 0; i < k; ++i) {
    x.push_back(ModP::from_raw(points[i] % ModP::modulus()));
    c.push_back(ModP::from_raw(values[i]));
  }
  // Newton divided differences in place
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - level]);
      if (i == level) break;
    }
  }
  // expand c0 + c1 (v - x0) + c2 (v - x0)(v - x1) + ... by Horner
  std::vector<ModP> poly{c[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<ModP> next(poly.size() + 1, ModP::from_raw(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * x[i];
    }
    next[0] += c[i];
    poly = std::move(next);
  }
  std::vector<std::uint32_t> out;
  for (const auto& v : poly) out.push_back(v.value());
  out.resize(k, 0);
  return out;
}

ModNuSeries interpolate_series(const std::vector<std::uint32_t>& points,
                               const std::vector<std::vector<std::uint32_t>>& values) {
  const std::size_t order = values.empty() ? 0 : values[0].size();
  ModNuSeries out(order);
  std::vector<std::uint32_t> column(points.size());
  for (std::size_t n = 0; n < order; ++n) {
    for (std::size_t i = 0; i < points.size(); ++i) column[i] = values[i][n];
    out[n] = interpolate_mod(points, column);
  }
  return out;
}

std::vector<std::uint32_t> primes_with_spare(const mpz_class& bound) {
  return kernel_primes(primes_for_bound(bound) + 1);
}

NuSeries reconstruct_series(const std::vector<std::uint32_t>& primes, const std::vector<ModNuSeries>& residues) {
  const CrtReconstructor full(primes);
  const CrtReconstructor reduced(std::vector<std::uint32_t>(primes.begin(), primes.end() - 1));
  const std::size_t order = residues.front().size();
  std::vector<PolyNu> coeffs;
  std::vector<std::uint32_t> r(primes.size());
  for (std::size_t n = 0; n < order; ++n) {
    const std::size_t degree = residues.front()[n].size();
    std::vector<BigRational> c;
    for (std::size_t k = 0; k < degree; ++k) {
      for (std::size_t i = 0; i < primes.size(); ++i) r[i] = residues[i][n][k];
      const mpz_class v = full.symmetric(r);
      if (v != reduced.symmetric(std::span<const std::uint32_t>(r.data(), r.size() - 1))) {
        throw ConsistencyFailure("modular reconstruction unstable at z^" + std::to_string(n) + " nu^" +
                                 std::to_string(k) + "; coefficient bound too small");
      }
      c.emplace_back(v);
    }
    coeffs.emplace_back(std::move(c));
  }
  return NuSeries(std::move(coeffs));
}

void for_each_prime_point(const std::vector<std::uint32_t>& primes, std::size_t points,
                          const std::function<void(std::size_t, std::size_t)>& fn) {
  const auto total = static_cast<long>(primes.size() * points);
#pragma omp parallel for schedule(dynamic, 1)
  for (long job = 0; job < total; ++job) {
    const auto pi = static_cast<std::size_t>(job) / points;
    const auto xi = static_cast<std::size_t>(job) % points;
    PrimeScope scope(primes[pi]);
    fn(pi, xi);
  }
}

mpz_class bicoloured_bound(std::size_t order) {
  const unsigned n = order == 0 ? 0 : static_cast<unsigned>(order - 1);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
  return two_pow * maps_count(n) * (2 * n + 2);
}

CatalyticSolution solve_catalytic_multimodular(std::size_t order) {
  const auto primes = primes_with_spare(bicoloured_bound(order));
  std::vector<std::uint32_t> points;
  for (std::uint32_t v = 0; v < std::max<std::size_t>(order, 1); ++v) points.push_back(v);
  std::vector<std::vector<KernelSlices>> slices(primes.size(), std::vector<KernelSlices>(points.size()));
  for_each_prime_point(primes, points.size(), [&](std::size_t pi, std::size_t xi) {
    slices[pi][xi] = catalytic_kernel_point(order, points[xi]);
  });
  std::vector<ModNuSeries> m11(primes.size()), dy(primes.size()), dx(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    PrimeScope scope(primes[pi]);
    std::vector<std::vector<std::uint32_t>> a, b, c;
    for (const auto& s : slices[pi]) {
      a.push_back(s.m11);
      b.push_back(s.dy);
      c.push_back(s.dx);
    }
    m11[pi] = interpolate_series(points, a);
    dy[pi] = interpolate_series(points, b);
    dx[pi] = interpolate_series(points, c);
  }
  CatalyticSolution sol;
  sol.M11 = reconstruct_series(primes, m11);
  sol.dy = reconstruct_series(primes, dy);
  sol.dx = reconstruct_series(primes, dx);
  return sol;
}

}  // namespace mapcount
