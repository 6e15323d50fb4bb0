#include "projframe/error.hpp"

namespace projframe {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAHyperplane: return "NotAHyperplane";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::OutsideChart: return "OutsideChart";
    case ErrorCode::DifferentCenters: return "DifferentCenters";
    case ErrorCode::NotInStabilizer: return "NotInStabilizer";
    case ErrorCode::NotPerspective: return "NotPerspective";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::DegenerateMeet: return "DegenerateMeet";
    case ErrorCode::InvalidH: return "InvalidH";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace projframe
