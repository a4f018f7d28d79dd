#pragma once

// Deficiency subspaces of the minimal Dirac operator on the two islands
// (−∞, −Λ] and [+Λ, ∞), plus the numerical machinery that checks them:
// ODE residuals, Simpson quadrature of inner products, and the boundary form
// obtained by integrating <H₀*ψ|φ> − <ψ|H₀*φ> by parts.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "junction/boundary.hpp"
#include "junction/mass.hpp"
#include "junction/sampling.hpp"

namespace junction {

enum class Island { Left, Right };
/// Plus: eigenvalue +i of H₀*. Minus: eigenvalue −i.
enum class Sign { Plus, Minus };

/// N = (1+m²)^{1/4} e^{−√(1+m²)Λ}. With this N the squared norm of a
/// deficiency function is e^{−4√(1+m²)Λ}, not 1, unless Λ = 0.
double face_scaled_normalization(Mass m, double lambda);

/// ψ(x) = n · s · e^{±√(1+m²) x} on one island and zero elsewhere, with the
/// spinor direction s:
///
///   Left/Plus (1, −μ)   Right/Plus (1, μ)   Left/Minus (1, μ*)   Right/Minus (1, −μ*)
struct DeficiencyFunction {
  Island island = Island::Left;
  Sign sign = Sign::Plus;
  Mass mass{};
  double lambda = 0.0;
  double normalization = 1.0;

  static DeficiencyFunction with_face_scaled_normalization(Island island, Sign sign, Mass m, double lambda);

  C2Vector direction() const noexcept;
  /// −Λ for Left, +Λ for Right.
  double face() const noexcept;
  /// Value on the island, ignoring the support cut-off.
  C2Vector profile(double x) const noexcept;
  /// Analytic x-derivative of profile().
  C2Vector profile_derivative(double x) const noexcept;
  /// Boundary value at the island's own face.
  C2Vector face_value() const noexcept { return profile(face()); }

  bool operator==(const DeficiencyFunction&) const = default;
};

/// χ_island(x) · profile(x); islands are closed, so both faces belong.
C2Vector eval_deficiency(const DeficiencyFunction& f, double x) noexcept;

/// Right-hand side matrix of ψ' = A ψ for H₀*ψ = ±iψ:
/// A = [[0, ∓1 + i m], [∓1 − i m, 0]].
C2Matrix deficiency_ode_matrix(Sign sign, Mass m) noexcept;

using SpinorField = std::function<C2Vector(double)>;

/// max-norm of (f(x+h) − f(x−h))/2h − A f(x). Throws OutsideIsland unless
/// [x−h, x+h] lies strictly inside the island.
double ode_residual(const SpinorField& f, Island island, Sign sign, Mass m, double lambda, double x, double h);
double ode_residual(const DeficiencyFunction& f, double x, double h);

/// Composite Simpson grid on [−X, −Λ] ∪ [Λ, X] with X = Λ + decay_lengths/√(1+m²).
struct QuadratureGrid {
  double decay_lengths = 40.0;
  int intervals = 20000;  // per island, must be even
  /// Relative bound e^{−2 decay_lengths} on the truncated tail must not exceed this.
  double max_tail = 1e-30;
};

/// FaceScaled multiplies by (1+m²)^{1/4} e^{−sΛ}; its squared norm is e^{−4sΛ}.
enum class Normalization { Unit, FaceScaled };

struct GramMatrix {
  /// entries[i][j] = <ψ_i|ψ_j>, i, j ∈ {Left, Right}.
  std::array<std::array<double, 2>, 2> entries{};

  int rank(double rel_tol = 1e-12) const noexcept;
};

/// Gram matrix of {ψ_L^±, ψ_R^±} by quadrature.
GramMatrix gram_matrix(Sign sign, Mass m, double lambda, Normalization norm = Normalization::Unit,
                       const QuadratureGrid& grid = {});

struct BoundaryPair {
  C2Vector at_minus;
  C2Vector at_plus;
};

/// −i{ψ↑(+Λ)*φ↓(+Λ) + ψ↓(+Λ)*φ↑(+Λ) − ψ↑(−Λ)*φ↓(−Λ) − ψ↓(−Λ)*φ↑(−Λ)}.
Complex boundary_form(const BoundaryPair& psi, const BoundaryPair& phi) noexcept;

/// Smooth compactly supported spinor a · exp(−1/(1−t²)), t = (x − center)/half_width.
struct Bump {
  C2Vector amplitude;
  double center = 0.0;
  double half_width = 1.0;

  double envelope(double x) const noexcept;
  double envelope_derivative(double x) const noexcept;
};

/// Element of D(H₀*) built from deficiency functions and bumps that vanish
/// near the faces. H₀* is applied analytically term by term.
class TrialFunction {
 public:
  TrialFunction(Mass m, double lambda);

  TrialFunction& add(Complex coefficient, Island island, Sign sign);
  /// Throws InvalidArgument unless the support sits strictly inside an island.
  TrialFunction& add_bump(const Bump& bump);

  Mass mass() const noexcept { return mass_; }
  double lambda() const noexcept { return lambda_; }

  C2Vector value(Island island, double x) const noexcept;
  /// (σx ⊗ (−i d/dx) + m σz) ψ on the given island.
  C2Vector apply_dirac(Island island, double x) const noexcept;
  BoundaryPair boundary_values() const noexcept;

  /// Coefficient of each basis function, indexed [island][sign].
  const std::array<std::array<Complex, 2>, 2>& coefficients() const noexcept { return coeffs_; }
  const std::vector<Bump>& bumps() const noexcept { return bumps_; }

 private:
  Mass mass_;
  double lambda_;
  std::array<std::array<Complex, 2>, 2> coeffs_{};
  std::vector<Bump> bumps_;
};

/// <H₀*ψ|φ> − <ψ|H₀*φ> by quadrature. Throws QuadratureFailure when the grid
/// cannot resolve the integrand and InvalidArgument on mismatched m or Λ.
Complex boundary_form_quadrature(const TrialFunction& psi, const TrialFunction& phi, const QuadratureGrid& grid = {});

/// Random combination of the four deficiency functions and `bumps` bumps.
TrialFunction random_trial_function(Sampler& rng, Mass m, double lambda, int bumps = 2);

struct SelfAdjointReport {
  std::size_t samples = 0;
  /// max |form(ψ, φ)| / max(1, ‖ψ‖‖φ‖) over bc-respecting pairs.
  double max_symmetry_residual = 0.0;
  /// For each face, a bc-violating ψ has max_k |form(ψ, φ_k)| against a basis
  /// {φ_k} of the bc's boundary values; this is the smaller of the two faces.
  double min_witness_form = 0.0;
  double tol = 1e-12;

  bool symmetric() const noexcept { return max_symmetry_residual <= tol; }
  bool maximal() const noexcept { return min_witness_form > 1e-6; }
  bool passed() const noexcept { return symmetric() && maximal(); }
};

/// Symmetry of the boundary form on random boundary values satisfying bc,
/// and a maximality witness per face. Throws NotInClass for invalid α.
SelfAdjointReport verify_selfadjoint_domain(const ExtensionClass& bc, std::size_t samples,
                                            std::uint64_t seed = kDefaultSeed, double tol = 1e-12);

}  // namespace junction
