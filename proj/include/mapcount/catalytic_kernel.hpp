#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mapcount/ising_catalytic.hpp"
#include "mapcount/modular.hpp"

namespace mapcount {

/// Coefficients modulo the current prime of a series whose z^n coefficient is
/// a polynomial in nu: residue[n][k] is the coefficient of z^n nu^k.
using ModNuSeries = std::vector<std::vector<std::uint32_t>>;

/// Slices of M(x,y; z, nu0) modulo the current prime at a fixed value nu0,
/// computed with dense residue arrays in x and y.
struct KernelSlices {
  std::vector<std::uint32_t> m11, dy, dx;
};
KernelSlices catalytic_kernel_point(std::size_t order, std::uint32_t nu0);

/// Coefficients (lowest first) of the polynomial of degree < points.size()
/// taking the given values, modulo the current prime.
std::vector<std::uint32_t> interpolate_mod(const std::vector<std::uint32_t>& points,
                                           const std::vector<std::uint32_t>& values);

/// Interpolates a family of pointwise series: values[point][n] -> residue[n][k].
ModNuSeries interpolate_series(const std::vector<std::uint32_t>& points,
                               const std::vector<std::vector<std::uint32_t>>& values);

/// Chooses primes for integers bounded by `bound` in absolute value, plus one
/// spare prime used to confirm that the reconstruction has stabilised.
std::vector<std::uint32_t> primes_with_spare(const mpz_class& bound);

/// Symmetric CRT of integer-coefficient series given residues per prime.
/// Throws ConsistencyFailure if dropping the spare prime changes any value.
NuSeries reconstruct_series(const std::vector<std::uint32_t>& primes,
                            const std::vector<ModNuSeries>& residues);

/// Runs fn(prime index, point index) over all pairs in parallel with the
/// prime installed on the executing thread.
void for_each_prime_point(const std::vector<std::uint32_t>& primes, std::size_t points,
                          const std::function<void(std::size_t, std::size_t)>& fn);

/// Upper bound on |coefficients| of bicoloured map series up to the given order
/// (colourings times maps, times a degree factor for the derivative slices).
mpz_class bicoloured_bound(std::size_t order);

/// Slices of the bicoloured catalytic solution by evaluation at nu = 0..order-1
/// modulo several primes, followed by interpolation and Chinese remaindering.
/// Same contract as solve_catalytic_bicoloured except that M_xy stays empty.
CatalyticSolution solve_catalytic_multimodular(std::size_t order);

}  // namespace mapcount
