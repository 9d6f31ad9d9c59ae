#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tspan {

enum class ErrorCode {
  ParseError,
  ZeroDenominator,
  ShapeMismatch,
  DuplicateLabel,
  NonzeroDiagonal,
  AsymmetricMatrix,
  NegativeDistance,
  ZeroOffDiagonal,
  TriangleViolation,
  DimensionMismatch,
  DisjointLabelSets,
  OverlapDisagreement,
  UnknownLabel,
  PreconditionViolated,
  InvalidRegion,
  EmptyRegion,
  NotGeodesicallyConvex,
  InternalInvariant,
  TargetOutsideRegion,
  LengthMismatch,
  BaseMismatch,
  InfeasibleInput,
  EmbeddingInfeasible,
  NegativeLength,
  MetricMismatch,
  ContainmentViolation,
  CenterOffPlane,
  DegeneratePolygon,
  EmptyTarget,
};

std::string_view to_string(ErrorCode code);

/// Library error. `witness()` carries the indices named by the failing check
/// (for example the (i, j, k) of a triangle violation).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::vector<std::size_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace tspan
