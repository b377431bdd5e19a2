#pragma once

#include <stdexcept>
#include <string>

namespace mapcount {

/// Base of every error raised by the library. `kind()` is the stable error name
/// that appears in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define MAPCOUNT_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(#Name, what) {}          \
  }

// exact_algebra
MAPCOUNT_DEFINE_ERROR(NonUnitConstantTerm);
MAPCOUNT_DEFINE_ERROR(NonzeroConstantTerm);
MAPCOUNT_DEFINE_ERROR(BadValuation);
MAPCOUNT_DEFINE_ERROR(NotTriangular);
MAPCOUNT_DEFINE_ERROR(DivisionError);
MAPCOUNT_DEFINE_ERROR(ParseError);
// map_oracle
MAPCOUNT_DEFINE_ERROR(CapExceeded);
// ising_catalytic
MAPCOUNT_DEFINE_ERROR(ConsistencyFailure);
MAPCOUNT_DEFINE_ERROR(MismatchAt);
// connectivity_tower
MAPCOUNT_DEFINE_ERROR(ValuationError);
MAPCOUNT_DEFINE_ERROR(DivisibilityError);
MAPCOUNT_DEFINE_ERROR(NormalizationFailure);
MAPCOUNT_DEFINE_ERROR(NoRootInInterval);
// algebraic_asymptotics
MAPCOUNT_DEFINE_ERROR(NotFound);
MAPCOUNT_DEFINE_ERROR(AmbiguousKernel);
MAPCOUNT_DEFINE_ERROR(BranchSelectionAmbiguous);
MAPCOUNT_DEFINE_ERROR(UnsupportedBranch);
MAPCOUNT_DEFINE_ERROR(UnsupportedExponent);
MAPCOUNT_DEFINE_ERROR(InsufficientData);
// workbench_cli
MAPCOUNT_DEFINE_ERROR(UnknownClaim);
MAPCOUNT_DEFINE_ERROR(UsageError);

#undef MAPCOUNT_DEFINE_ERROR

}  // namespace mapcount
