#include "junction/scattering.hpp"

#include <cmath>
#include <sstream>

namespace junction {

namespace {

constexpr Complex kI{0.0, 1.0};

C2Vector normalized(const C2Vector& v) noexcept {
  const double n = v.norm();
  return n > 0.0 ? (1.0 / n) * v : C2Vector{};
}

ScatteringResult base_result(const PlaneWaveBasis& basis) noexcept {
  ScatteringResult out;
  out.E = basis.E;
  out.k = basis.k;
  out.lambda = basis.lambda;
  return out;
}

void finish(ScatteringResult& out) noexcept {
  out.R = std::norm(out.r);
  out.T = std::norm(out.t);
  out.transmission_phase = out.t == Complex{} ? 0.0 : std::arg(out.t);
}

/// c with v = c·w and |c| = 1, if one exists.
std::optional<Complex> unimodular_factor(const C2Vector& v, const C2Vector& w, double tol) {
  const Complex c = std::abs(w.up) >= std::abs(w.down) ? v.up / w.up : v.down / w.down;
  if (std::abs(std::abs(c) - 1.0) > tol || max_abs_diff(v, c * w) > tol) return std::nullopt;
  return c;
}

SwitchUnit run_unit(std::string name, const AlphaBC& bc, const C2Vector& input, double tol) {
  SwitchUnit unit{std::move(name), bc, input, apply_alpha(bc, input), {}, false, false};
  unit.scattering = scatter_alpha(bc, 1.0, Mass(0.0));
  unit.preserves_spin = unimodular_factor(unit.output, input, tol).has_value();
  unit.swaps_spin = unimodular_factor(unit.output, C2Vector{input.down, input.up}, tol).has_value();
  return unit;
}

}  // namespace

PlaneWaveBasis plane_spinors(double E, Mass m, double tol) {
  if (!std::isfinite(E) || !(E > m.value() + tol)) {
    std::ostringstream msg;
    msg << "energy " << E << " is not above the gap m = " << m.value();
    throw Error(ErrorCode::BelowGap, msg.str());
  }
  PlaneWaveBasis b;
  b.E = E;
  b.k = std::sqrt((E - m.value()) * (E + m.value()));
  b.lambda = b.k / (E + m.value());
  b.u_plus = {1.0, b.lambda};
  b.u_minus = {1.0, -b.lambda};
  return b;
}

double eigen_residual(const PlaneWaveBasis& basis, Mass m) noexcept {
  auto residual = [&](double k, const C2Vector& u) {
    const C2Matrix h{m.value(), k, k, -m.value()};
    return max_abs_diff(h * u, basis.E * u);
  };
  return std::max(residual(basis.k, basis.u_plus), residual(-basis.k, basis.u_minus));
}

ScatteringResult scatter_alpha(const AlphaBC& a, double E, Mass m, double tol) {
  require_class(a, tol);
  const PlaneWaveBasis basis = plane_spinors(E, m, tol);
  const C2Matrix b = a.matrix();

  C2Vector tr;
  try {
    tr = solve(C2Matrix::from_columns(basis.u_plus, Complex{-1.0} * (b * basis.u_minus)), b * basis.u_plus, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularSystem) throw;
    std::ostringstream msg;
    msg << "matching system is singular at E = " << E;
    throw Error(ErrorCode::ResonanceSingular, msg.str());
  }

  ScatteringResult out = base_result(basis);
  out.t = tr.up;
  out.r = tr.down;
  out.incoming_spin = normalized(basis.u_plus + out.r * basis.u_minus);
  out.transmitted_spin = normalized(out.t * basis.u_plus);
  finish(out);
  return out;
}

ScatteringResult scatter_rho(const RhoBC& r, double E, Mass m, Face face, double tol) {
  const PlaneWaveBasis basis = plane_spinors(E, m, tol);
  const ExtendedReal& rho = face == Face::Left ? r.rho_minus : r.rho_plus;
  const double lambda = basis.lambda;

  ScatteringResult out = base_result(basis);
  if (rho.is_infinite()) {
    out.r = -1.0;
  } else if (face == Face::Left) {
    out.r = (lambda - kI * rho.value()) / (lambda + kI * rho.value());
  } else {
    out.r = (lambda + kI * rho.value()) / (lambda - kI * rho.value());
  }
  out.incoming_spin = face == Face::Left ? normalized(basis.u_plus + out.r * basis.u_minus)
                                         : normalized(basis.u_minus + out.r * basis.u_plus);
  finish(out);
  return out;
}

ScatteringResult scatter(const ExtensionClass& bc, double E, Mass m, Face face, double tol) {
  if (const auto* a = std::get_if<AlphaBC>(&bc)) return scatter_alpha(*a, E, m, tol);
  return scatter_rho(std::get<RhoBC>(bc), E, m, face, tol);
}

double EnergyGrid::at(int i) const noexcept {
  if (i == steps - 1) return e_max;
  return e_min + (e_max - e_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<SweepRow> sweep(const ExtensionClass& bc, const EnergyGrid& grid, Mass m, Face face, double tol) {
  if (!std::isfinite(grid.e_min) || !std::isfinite(grid.e_max) || !(m.value() < grid.e_min) ||
      !(grid.e_min < grid.e_max) || grid.steps < 2) {
    throw Error(ErrorCode::InvalidArgument, "energy grid needs m < e_min < e_max and at least 2 steps");
  }
  if (const auto* a = std::get_if<AlphaBC>(&bc)) require_class(*a, tol);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.steps));
  for (int i = 0; i < grid.steps; ++i) {
    SweepRow row{grid.at(i), std::nullopt};
    try {
      row.result = scatter(bc, row.E, m, face, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResonanceSingular) throw;
    }
    rows.push_back(row);
  }
  return rows;
}

SwitchDemoReport switch_demo(const std::vector<double>& phase_thetas, double tol) {
  const C2Vector spin_up_dominant{0.8, 0.6};

  SwitchDemoReport report;
  report.unit0 = run_unit("Unit0", make_phase_shift(0.0, 1.0), spin_up_dominant, tol);
  report.unit1 = run_unit("Unit1", make_spin_flip(-kPi / 2.0, 1.0), spin_up_dominant, tol);

  bool ok = report.unit0.preserves_spin && std::abs(report.unit0.scattering.T - 1.0) <= tol &&
            report.unit1.swaps_spin && std::abs(report.unit1.scattering.T - 1.0) <= tol;

  for (double theta : phase_thetas) {
    PhaseVariant v;
    v.theta = theta;
    v.bc = make_phase_shift(theta, 1.0);
    v.scattering = scatter_alpha(v.bc, 1.0, Mass(0.0));
    const double expected = std::arg(std::polar(1.0, theta));
    v.verified = std::abs(v.scattering.T - 1.0) <= tol && std::abs(v.scattering.transmission_phase - expected) <= tol;
    ok = ok && v.verified;
    report.phases.push_back(v);
  }
  report.verified = ok;
  return report;
}

}  // namespace junction
