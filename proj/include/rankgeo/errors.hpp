#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankgeo {

/// Base type for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RANKGEO_ERROR(NAME)                \
  class NAME : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// field_tower
RANKGEO_ERROR(NotPrime);
RANKGEO_ERROR(FieldTooLarge);
RANKGEO_ERROR(NoPolynomialInTable);
RANKGEO_ERROR(InverseOfZero);
RANKGEO_ERROR(NotABasis);
RANKGEO_ERROR(CoordinateNotInSubfield);

// linalg
RANKGEO_ERROR(MixedTowers);
RANKGEO_ERROR(DimensionOutOfRange);
RANKGEO_ERROR(Overflow);

// code_core / qsystem
RANKGEO_ERROR(RankDeficientGenerator);
RANKGEO_ERROR(DegenerateCode);

// grw / wiretap
RANKGEO_ERROR(HierarchyInvariantViolation);
RANKGEO_ERROR(RankDeficientB);
RANKGEO_ERROR(InconsistentSyndrome);

// constructions
RANKGEO_ERROR(BadParameters);
RANKGEO_ERROR(DualDimensionZero);
RANKGEO_ERROR(ClassificationContradiction);

// serialization / cli input
RANKGEO_ERROR(ParseError);

#undef RANKGEO_ERROR

/// Raised when a requested exhaustive search exceeds the configured cap.
/// Carries the size the search would have enumerated.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(const std::string& what, std::uint64_t would_enumerate)
      : Error(what + " (would enumerate " + std::to_string(would_enumerate) + ")"),
        would_enumerate_(would_enumerate) {}

  std::uint64_t would_enumerate() const noexcept { return would_enumerate_; }

 private:
  std::uint64_t would_enumerate_;
};

}  // namespace rankgeo
