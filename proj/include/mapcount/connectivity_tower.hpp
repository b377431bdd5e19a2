#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mapcount/catalytic_kernel.hpp"
#include "mapcount/ising_catalytic.hpp"

namespace mapcount {

/// Uncoloured tower: 2-connected B, networks D = B/z, series and parallel
/// networks S = P, 3-connected T and f the functional inverse of D.
struct TowerUncoloured {
  QSeries M, B, D, S, P, T, f;
};

/// B from M = 1 + 2zM^2 + B(zM^2), then D, S, P, f and T = z - 2z^2/(1+z) - f.
TowerUncoloured build_uncoloured_tower(const QSeries& M);

/// 2-connected series of the class whose maps M satisfy
/// M = 1 + cores(zM^2): returns (M - 1 - 2zM^2) o (zM^2)^{-1}.
QSeries two_connected_from_maps(const QSeries& M);
/// Non-empty bipartite maps Mb: 1 + Mb = 1 + z(1+Mb)^2 + Bb(z(1+Mb)^2).
QSeries bipartite_two_connected(const QSeries& Mb);

/// How the 3-connected term is divided before substitution: not at all, by
/// the first argument D2, or by the network of the root edge (D1 for
/// monochromatic roots, D2 for bichromatic roots).
enum class Normalization { Bare, FirstArgument, RootNetwork };
std::string to_string(Normalization n);
Normalization parse_normalization(const std::string& s);
const std::vector<Normalization>& all_normalizations();

/// Bicoloured tower; series in z with coefficients polynomial in nu.
struct TowerBicoloured {
  NuSeries B1, B2, D1, D2, S1, S2, P1, P2, T1, T2;
  QSeries Tb;  // T2 at nu = 0
  Normalization normalization = Normalization::RootNetwork;
};

/// B1 = (M1 - 2nu zM^2) o h^{-1}, B2 = (M2 - zM^2) o h^{-1}, h = zM^2.
/// Throws DivisibilityError if B1 is not divisible by nu.
std::pair<NuSeries, NuSeries> build_bicoloured_two_connected(const IsingSplit& split);

/// Networks, series/parallel parts and the 3-connected series by exact
/// arithmetic over Q[nu] (reference path).
TowerBicoloured build_bicoloured_three_connected(const NuSeries& B1, const NuSeries& B2,
                                                 Normalization norm);

/// S1, S2 from the 2x2 system by Cramer's rule (cross-check of the triangular solve).
std::pair<NuSeries, NuSeries> series_networks_cramer(const NuSeries& D1, const NuSeries& D2);

/// Whole bicoloured pipeline from the catalytic equation to T1, T2 by
/// evaluation at nu = 1..order+1 modulo several primes.
struct FastPipelineResult {
  IsingSplit split;
  NuSeries B1, B2, T1, T2;
  QSeries Tb;
  std::size_t primes = 0;
};
FastPipelineResult bicoloured_pipeline_multimodular(std::size_t order, Normalization norm);

/// Checks T1, T2 at z^6 against given values and T_b against a table of known
/// coefficients; returns the list of normalizations passing both.
struct NormalizationEvidence {
  Normalization norm;
  bool matches_base_case = false;
  bool matches_table = false;
  bool vanishes_below_six = false;
  std::string detail;
};
std::vector<NormalizationEvidence> compare_normalizations(
    const IsingSplit& small_split, const PolyNu& t1_six, const PolyNu& t2_six,
    const std::map<std::size_t, long>& tb_table, std::size_t table_order);

}  // namespace mapcount
