#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace junction {

enum class ErrorCode {
  InvalidArgument,
  NotUnitary,
  InvalidForm,
  NotInClass,
  InvalidBD,
  ZeroParameter,
  NotUnimodular,
  DiagonalInput,
  SingularSystem,
  InternalInconsistency,
  OutsideIsland,
  QuadratureFailure,
  BelowGap,
  ResonanceSingular,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type thrown by every fallible operation in the library.
///
/// `residual()` carries the size of the violated condition (unitarity
/// defect, class residual, ...) when one exists, and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double residual = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorCode code_;
  double residual_;
};

}  // namespace junction
