#pragma once

// Stationary plane-wave scattering through the junction.
//
// A wave u₊e^{ik(x+Λ)} arrives from the left, r u₋e^{−ik(x+Λ)} is reflected
// and t u₊e^{ik(x−Λ)} leaves on the right, so amplitudes are referenced to
// the faces and do not depend on Λ.

#include <optional>
#include <string>
#include <vector>

#include "junction/boundary.hpp"
#include "junction/mass.hpp"

namespace junction {

/// Free spinors of σx k + m σz at energy E > m.
struct PlaneWaveBasis {
  double E = 0.0;
  double k = 0.0;
  /// k/(E + m), in (0, 1].
  double lambda = 0.0;
  C2Vector u_plus;   // (1, λ), momentum +k
  C2Vector u_minus;  // (1, −λ), momentum −k
};

/// Throws BelowGap unless E > m + tol and E is finite.
PlaneWaveBasis plane_spinors(double E, Mass m, double tol = kDefaultTol);

/// max over u± of ‖(σx(±k) + mσz)u − E u‖_max.
double eigen_residual(const PlaneWaveBasis& basis, Mass m) noexcept;

enum class Face { Left, Right };

struct ScatteringResult {
  double E = 0.0;
  double k = 0.0;
  double lambda = 0.0;
  Complex r{};
  Complex t{};
  double R = 0.0;
  double T = 0.0;
  /// Unit-normalized ψ at the incidence face and at the far face (zero when
  /// nothing is transmitted).
  C2Vector incoming_spin;
  C2Vector transmitted_spin;
  /// arg t in (−π, π]; 0 when t = 0.
  double transmission_phase = 0.0;
};

/// Solves t u₊ = B_α(u₊ + r u₋). Throws NotInClass, BelowGap, and
/// ResonanceSingular when the matching system is singular.
ScatteringResult scatter_alpha(const AlphaBC& a, double E, Mass m, double tol = kDefaultTol);

/// Total reflection at one face. Left incidence gives r = (λ − iρ₋)/(λ + iρ₋),
/// right incidence r = (λ + iρ₊)/(λ − iρ₊); ρ = +∞ gives r = −1.
ScatteringResult scatter_rho(const RhoBC& r, double E, Mass m, Face face = Face::Left, double tol = kDefaultTol);

ScatteringResult scatter(const ExtensionClass& bc, double E, Mass m, Face face = Face::Left,
                         double tol = kDefaultTol);

struct EnergyGrid {
  double e_min = 0.0;
  double e_max = 0.0;
  int steps = 2;

  double at(int i) const noexcept;
};

struct SweepRow {
  double E = 0.0;
  /// Empty when the matching system is singular at E.
  std::optional<ScatteringResult> result;

  bool resonance() const noexcept { return !result.has_value(); }
};

/// Uniform grid, ordered by E. Singular rows are kept and flagged.
/// Throws InvalidArgument unless m < e_min < e_max and steps >= 2.
std::vector<SweepRow> sweep(const ExtensionClass& bc, const EnergyGrid& grid, Mass m, Face face = Face::Left,
                            double tol = kDefaultTol);

struct SwitchUnit {
  std::string name;
  AlphaBC bc;
  C2Vector input;
  /// B_α · input.
  C2Vector output;
  ScatteringResult scattering;
  bool preserves_spin = false;
  bool swaps_spin = false;
};

struct PhaseVariant {
  double theta = 0.0;
  AlphaBC bc;
  ScatteringResult scattering;
  bool verified = false;
};

struct SwitchDemoReport {
  SwitchUnit unit0;
  SwitchUnit unit1;
  std::vector<PhaseVariant> phases;
  bool verified = false;
};

/// Unit 0 (no flip) and Unit 1 (spin flip) acting on a spin-up-dominant
/// spinor, each scattered at m = 0, E = 1, plus pure phase shifts e^{iθ}.
SwitchDemoReport switch_demo(const std::vector<double>& phase_thetas = {kPi / 4.0, kPi / 2.0}, double tol = 1e-12);

}  // namespace junction
