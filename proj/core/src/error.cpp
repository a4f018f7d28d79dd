#include "junction/error.hpp"

namespace junction {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::InvalidBD: return "InvalidBD";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::DiagonalInput: return "DiagonalInput";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::OutsideIsland: return "OutsideIsland";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::BelowGap: return "BelowGap";
    case ErrorCode::ResonanceSingular: return "ResonanceSingular";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, double residual)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      residual_(residual) {}

}  // namespace junction
