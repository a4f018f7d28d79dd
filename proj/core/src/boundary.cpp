#include "junction/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace junction {

ExtendedReal::ExtendedReal(double value) {
  if (std::isnan(value)) throw Error(ErrorCode::InvalidArgument, "extended real cannot be NaN");
  if (std::isinf(value)) {
    if (value < 0.0) throw Error(ErrorCode::InvalidArgument, "-inf is not an admissible boundary parameter");
    infinite_ = true;
    return;
  }
  value_ = value;
}

double ExtendedReal::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double AlphaBC::squared_norm() const noexcept {
  return std::norm(a1) + std::norm(a2) + std::norm(a3) + std::norm(a4);
}

double max_abs_diff(const AlphaBC& a, const AlphaBC& b) noexcept {
  return std::max({std::abs(a.a1 - b.a1), std::abs(a.a2 - b.a2), std::abs(a.a3 - b.a3), std::abs(a.a4 - b.a4)});
}

bool equivalent(const BDForm& a, const BDForm& b, double tol) noexcept {
  auto angle_gap = [](double x, double y) {
    const double d = wrap_angle(x - y);
    return std::min(d, kTwoPi - d);
  };
  auto close = [&](double sign, double theta_shift) {
    return angle_gap(a.theta, b.theta + theta_shift) <= tol && std::abs(a.b1 - sign * b.b1) <= tol &&
           std::abs(a.b2 - sign * b.b2) <= tol && std::abs(a.b3 - sign * b.b3) <= tol &&
           std::abs(a.b4 - sign * b.b4) <= tol;
  };
  return close(1.0, 0.0) || close(-1.0, kPi);
}

double ClassReport::max_abs_residual() const noexcept {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, std::abs(r));
  return m;
}

double ClassReport::max_scaled_residual() const noexcept { return max_abs_residual() / scale; }

std::size_t ClassReport::worst() const noexcept {
  std::size_t idx = 0;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    if (std::abs(residuals[i]) > std::abs(residuals[idx])) idx = i;
  }
  return idx;
}

ClassReport validate_class(const AlphaBC& a, double tol) noexcept {
  ClassReport report;
  const auto& [a1, a2, a3, a4] = a;
  report.residuals = {
      (a1 * std::conj(a2)).real(),
      (a1 * std::conj(a3)).real(),
      (a2 * std::conj(a4)).real(),
      (a3 * std::conj(a4)).real(),
      std::abs(a1 * std::conj(a4) + a2 * std::conj(a3) - 1.0),
      std::abs(a1 * std::conj(a4) + std::conj(a2) * a3 - 1.0),
  };
  const bool finite = is_finite(a1) && is_finite(a2) && is_finite(a3) && is_finite(a4);
  report.scale = std::max(1.0, a.squared_norm());
  report.valid = finite && report.max_abs_residual() <= tol * report.scale;
  return report;
}

void require_class(const AlphaBC& a, double tol) {
  const ClassReport report = validate_class(a, tol);
  if (report.valid) return;
  const std::size_t w = report.worst();
  std::ostringstream msg;
  msg << "alpha is not in the self-adjoint class: " << ClassReport::kNames[w] << " = " << report.residuals[w];
  throw Error(ErrorCode::NotInClass, msg.str(), std::abs(report.residuals[w]));
}

BDForm alpha_to_bd(const AlphaBC& a, double tol) {
  require_class(a, tol);
  const auto& [a1, a2, a3, a4] = a;
  const double imag_tol = tol * std::max(1.0, a.squared_norm());
  const Complex i{0.0, 1.0};

  std::array<Complex, 4> b;
  double theta = 0.0;
  if (std::abs(a1) > tol) {
    const double r = std::abs(a1);
    theta = arg_0_2pi(a1);
    b = {r, -i * std::conj(a1 * std::conj(a2)) / r, -i * std::conj(a1 * std::conj(a3)) / r,
         std::conj(a1 * std::conj(a4)) / r};
  } else {
    // a1 = 0 forces a2 a3* = 1, so a3 is bounded away from zero here
    const double r = std::abs(a3);
    theta = arg_0_2pi(-i * a3);
    b = {i * a1 * std::conj(a3) / r, a2 * std::conj(a3) / r, r, i * std::conj(a3 * std::conj(a4)) / r};
  }

  for (const Complex& bj : b) {
    if (std::abs(bj.imag()) > imag_tol) {
      std::ostringstream msg;
      msg << "BD coefficient has imaginary part " << bj.imag();
      throw Error(ErrorCode::NotInClass, msg.str(), std::abs(bj.imag()));
    }
  }
  return {theta, b[0].real(), b[1].real(), b[2].real(), b[3].real()};
}

AlphaBC bd_to_alpha(const BDForm& f, double tol) {
  const bool finite = std::isfinite(f.theta) && std::isfinite(f.b1) && std::isfinite(f.b2) &&
                      std::isfinite(f.b3) && std::isfinite(f.b4);
  if (!finite) throw Error(ErrorCode::InvalidBD, "BD form has non-finite fields");
  const double residual = std::abs(f.b1 * f.b4 + f.b2 * f.b3 - 1.0);
  const double scale = std::max({1.0, f.b1 * f.b1 + f.b2 * f.b2 + f.b3 * f.b3 + f.b4 * f.b4});
  if (residual > tol * scale) {
    std::ostringstream msg;
    msg << "b1 b4 + b2 b3 = " << f.b1 * f.b4 + f.b2 * f.b3 << ", expected 1";
    throw Error(ErrorCode::InvalidBD, msg.str(), residual);
  }
  const Complex phase = std::polar(1.0, f.theta);
  const Complex i_phase = Complex{0.0, 1.0} * phase;
  return {phase * f.b1, i_phase * f.b2, i_phase * f.b3, phase * f.b4};
}

AlphaBC invert_alpha(const AlphaBC& a, double tol) {
  require_class(a, tol);
  return {std::conj(a.a4), std::conj(a.a2), std::conj(a.a3), std::conj(a.a1)};
}

C2Vector apply_alpha(const AlphaBC& a, const C2Vector& v_minus) noexcept { return a.matrix() * v_minus; }

bool satisfies_rho_face(const ExtendedReal& rho, const C2Vector& v, double tol) noexcept {
  if (!v.finite()) return false;
  const double scale = std::max({1.0, std::abs(v.up), std::abs(v.down)});
  if (rho.is_infinite()) return std::abs(v.up) <= tol * scale;
  return std::abs(Complex{0.0, rho.value()} * v.up - v.down) <= tol * scale;
}

bool satisfies_rho(const RhoBC& r, const C2Vector& v_minus, const C2Vector& v_plus, double tol) noexcept {
  return satisfies_rho_face(r.rho_minus, v_minus, tol) && satisfies_rho_face(r.rho_plus, v_plus, tol);
}

double current(const C2Vector& v) noexcept { return 2.0 * (std::conj(v.up) * v.down).real(); }

AlphaBC make_spin_flip(double theta, double b2) {
  if (b2 == 0.0 || !std::isfinite(b2)) throw Error(ErrorCode::ZeroParameter, "spin-flip amplitude b2 must be nonzero");
  return bd_to_alpha({theta, 0.0, b2, 1.0 / b2, 0.0});
}

AlphaBC make_phase_shift(double theta, double b1) {
  if (b1 == 0.0 || !std::isfinite(b1)) throw Error(ErrorCode::ZeroParameter, "phase-shift amplitude b1 must be nonzero");
  return bd_to_alpha({theta, b1, 0.0, 0.0, 1.0 / b1});
}

}  // namespace junction
