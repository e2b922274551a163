#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnum {

enum class ErrorCode {
  InconsistentSamples,
  InsufficientSamples,
  SingularMatrix,
  NotSymmetric,
  DimensionMismatch,
  ParamMismatch,
  DimensionOdd,
  WeightMismatch,
  ParityMismatch,
  BadParams,
  InsufficientOrder,
  SymbolicC,
  SingularThomMatrix,
  PivotZero,
  Precondition,
  Parse,
  Validation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit status 2.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace pnum
