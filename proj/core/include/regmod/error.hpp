#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regmod {

enum class ErrorCode {
  DimensionMismatch,
  NonFiniteCoordinate,
  InvalidArgument,
  EmptyGrid,
  EmptySetInRegion,
  OutOfRegion,
  UndefinedSlope,
  EmptyBand,
  HypothesisIIFails,
  HypothesisIIIFails,
  HypothesisIVFails,
  NoPerturbedFeasiblePoints,
  DegenerateProblem,
  UnknownEntry,
  UnknownOperation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// reports can embed it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace regmod
