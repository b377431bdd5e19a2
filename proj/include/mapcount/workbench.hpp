#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mapcount/algebraic_asymptotics.hpp"
#include "mapcount/connectivity_tower.hpp"
#include "mapcount/series_json.hpp"

namespace mapcount {

inline constexpr const char* kReportSchema = "mapcount.report/1";

enum class Provenance { Exact, CertifiedInterval, Heuristic };
std::string to_string(Provenance p);

struct Check {
  std::string name;
  bool pass = false;
  Json expected;
  Json got;
  std::string note;
};

/// Result of one command. Everything except the timings is a deterministic
/// function of the inputs.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json conventions = Json::object();
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings;

  bool passed() const;
  Check& check(std::string name, bool pass, Json expected, Json got, std::string note = {});
  Json to_json(bool with_timings = true) const;

  /// Runs f and records its wall-clock time under `name`.
  template <class F>
  decltype(auto) stage(const std::string& name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto done = [&] {
      timings.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      done();
    } else {
      auto r = f();
      done();
      return r;
    }
  }
};

/// {"value": v, "provenance": ...}
Json tagged(Json v, Provenance p);
Json interval_to_json(const Interval& iv, int digits = 12);

/// Throws UsageError when the order exceeds MAPCOUNT_MAX_ORDER (if set).
std::size_t checked_order(std::size_t order);

/// The claims manifest compiled into the binary.
const Json& claims_manifest();
std::vector<std::string> claim_ids();

/// Runs the pipeline behind a registered claim. `order` overrides the
/// manifest's order (for theorem1_rho it is the order of the T_b ratio
/// diagnostic, 0 to skip). Throws UnknownClaim.
RunReport cmd_reproduce(const std::string& claim_id, std::optional<std::size_t> order = std::nullopt);

RunReport cmd_oracle(int edges, const std::string& weighting);
/// method is "exact" or "multimodular".
RunReport cmd_ising(std::size_t order, const std::string& method);
RunReport cmd_tower(std::size_t order, bool coloured, std::optional<BigRational> nu_at, Normalization norm);
RunReport cmd_guess(const QSeries& s, std::size_t degT, std::size_t degZ, std::size_t verify);
/// Singularity analysis of the branch with T(0) = t0 (default: the simple
/// rational root of P(0, T) of least absolute value) on the interval (lo, hi].
RunReport cmd_asympt(const AlgebraicCurve& c, const BigRational& lo, const BigRational& hi,
                     const BigRational& width, std::optional<BigRational> t0, std::size_t order);
RunReport cmd_bicubic(std::size_t order, const BigRational& width);

/// Exact cube root of a rational, if it is a perfect cube.
std::optional<BigRational> rational_cube_root(const BigRational& v);

}  // namespace mapcount
