#pragma once

#include <cmath>

#include "junction/matrix2.hpp"

namespace junction {

/// Electron mass m >= 0 in natural units.
class Mass {
 public:
  constexpr Mass() = default;
  /// Throws InvalidArgument unless m is finite and non-negative.
  explicit Mass(double m) : value_(m) {
    if (!std::isfinite(m) || m < 0.0) throw Error(ErrorCode::InvalidArgument, "mass must be finite and >= 0");
  }

  constexpr double value() const noexcept { return value_; }

  /// √(1 + m²): decay rate of the deficiency functions.
  double root() const noexcept { return std::hypot(1.0, value_); }

  /// μ = (1 + i m)/√(1 + m²); unimodular with Re μ > 0.
  Complex mu() const noexcept { return Complex{1.0, value_} / root(); }

  friend constexpr bool operator==(const Mass&, const Mass&) = default;

 private:
  double value_ = 0.0;
};

}  // namespace junction
