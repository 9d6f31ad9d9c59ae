#include "tspan/error.hpp"

namespace tspan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DisjointLabelSets: return "DisjointLabelSets";
    case ErrorCode::OverlapDisagreement: return "OverlapDisagreement";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::NotGeodesicallyConvex: return "NotGeodesicallyConvex";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    case ErrorCode::TargetOutsideRegion: return "TargetOutsideRegion";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::InfeasibleInput: return "InfeasibleInput";
    case ErrorCode::EmbeddingInfeasible: return "EmbeddingInfeasible";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::MetricMismatch: return "MetricMismatch";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::CenterOffPlane: return "CenterOffPlane";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::EmptyTarget: return "EmptyTarget";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace tspan
