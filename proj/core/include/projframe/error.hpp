#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projframe {

enum class ErrorCode {
  ZeroVector,
  MixedDimensions,
  NonSquare,
  Singular,
  ShapeMismatch,
  DivisionByZero,
  NotAHyperplane,
  InvalidFrame,
  OutsideChart,
  DifferentCenters,
  NotInStabilizer,
  NotPerspective,
  NotStrict,
  DegenerateMeet,
  InvalidH,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. Callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace projframe
