#include "regmod/error.hpp"

namespace regmod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::EmptySetInRegion: return "EmptySetInRegion";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::UndefinedSlope: return "UndefinedSlope";
    case ErrorCode::EmptyBand: return "EmptyBand";
    case ErrorCode::HypothesisIIFails: return "HypothesisIIFails";
    case ErrorCode::HypothesisIIIFails: return "HypothesisIIIFails";
    case ErrorCode::HypothesisIVFails: return "HypothesisIVFails";
    case ErrorCode::NoPerturbedFeasiblePoints: return "NoPerturbedFeasiblePoints";
    case ErrorCode::DegenerateProblem: return "DegenerateProblem";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::UnknownOperation: return "UnknownOperation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace regmod
