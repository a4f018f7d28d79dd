#pragma once

// Boundary conditions at the junction faces ±Λ.
//
// Two families exist. A separating condition (RhoBC) fixes the spinor ratio
// on each face independently:
//
//   iρ ψ↑(face) = ψ↓(face)   (ρ finite)      ψ↑(face) = 0   (ρ = +∞)
//
// A transmitting condition (AlphaBC) ties the faces together through the
// boundary matrix, ψ(+Λ) = B_α ψ(−Λ) with B_α = [[a1, a2], [a3, a4]].

#include <array>
#include <string_view>
#include <variant>

#include "junction/matrix2.hpp"

namespace junction {

/// A real number or +∞. There is no −∞.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  /// Throws InvalidArgument for NaN and −∞; +inf maps to plus_infinity().
  explicit ExtendedReal(double value);

  static constexpr ExtendedReal plus_infinity() noexcept {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; +inf when infinite.
  double value() const noexcept;

  friend constexpr bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

struct RhoBC {
  ExtendedReal rho_plus;
  ExtendedReal rho_minus;

  friend bool operator==(const RhoBC&, const RhoBC&) = default;
};

struct AlphaBC {
  Complex a1{1.0};
  Complex a2{};
  Complex a3{};
  Complex a4{1.0};

  C2Matrix matrix() const noexcept { return {a1, a2, a3, a4}; }
  static AlphaBC from_matrix(const C2Matrix& b) noexcept { return {b.u11, b.u12, b.u21, b.u22}; }
  std::array<Complex, 4> components() const noexcept { return {a1, a2, a3, a4}; }
  /// Σ|a_i|², the magnitude scale used by validate_class.
  double squared_norm() const noexcept;

  friend bool operator==(const AlphaBC&, const AlphaBC&) = default;
};

double max_abs_diff(const AlphaBC& a, const AlphaBC& b) noexcept;

/// e^{iθ} [[b1, i b2], [i b3, b4]] with real b's and b1 b4 + b2 b3 = 1.
///
/// (θ, b) and (θ + π, −b) describe the same matrix.
struct BDForm {
  double theta = 0.0;
  double b1 = 1.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double b4 = 1.0;

  friend bool operator==(const BDForm&, const BDForm&) = default;
};

/// Equality modulo the joint flip (θ, b) → (θ + π, −b).
bool equivalent(const BDForm& a, const BDForm& b, double tol = kDefaultTol) noexcept;

/// Either kind of self-adjoint boundary condition. Every extension falls in
/// exactly one of the two.
using ExtensionClass = std::variant<RhoBC, AlphaBC>;

inline bool is_separating(const ExtensionClass& bc) noexcept { return std::holds_alternative<RhoBC>(bc); }
inline bool is_transmitting(const ExtensionClass& bc) noexcept { return std::holds_alternative<AlphaBC>(bc); }

struct ClassReport {
  static constexpr std::array<std::string_view, 6> kNames = {
      "Re(a1 a2*)",           "Re(a1 a3*)",           "Re(a2 a4*)",
      "Re(a3 a4*)",           "|a1 a4* + a2 a3* - 1|", "|a1 a4* + a2* a3 - 1|",
  };

  bool valid = false;
  /// Raw residuals, in kNames order. The first four are signed.
  std::array<double, 6> residuals{};
  /// max(1, Σ|a_i|²); each |residual| is compared against tol * scale.
  double scale = 1.0;

  double max_abs_residual() const noexcept;
  /// max |residual| / scale.
  double max_scaled_residual() const noexcept;
  /// Index of the largest scaled residual.
  std::size_t worst() const noexcept;
};

ClassReport validate_class(const AlphaBC& a, double tol = kDefaultTol) noexcept;

/// Throws NotInClass with the worst residual when validate_class fails.
void require_class(const AlphaBC& a, double tol = kDefaultTol);

/// Splits off the common phase: B_α = e^{iθ}[[b1, i b2], [i b3, b4]].
/// Uses the a1 ≠ 0 construction when |a1| > tol, otherwise the a3 one.
BDForm alpha_to_bd(const AlphaBC& a, double tol = kDefaultTol);

/// Throws InvalidBD when b1 b4 + b2 b3 ≠ 1 or any field is non-finite.
AlphaBC bd_to_alpha(const BDForm& f, double tol = kDefaultTol);

/// B_α⁻¹ = [[a4*, a2*], [a3*, a1*]] for class-valid α.
AlphaBC invert_alpha(const AlphaBC& a, double tol = kDefaultTol);

/// B_α · v.
C2Vector apply_alpha(const AlphaBC& a, const C2Vector& v_minus) noexcept;

/// One face of the separating condition.
bool satisfies_rho_face(const ExtendedReal& rho, const C2Vector& v, double tol = kDefaultTol) noexcept;

/// Both faces; residuals are scaled by max(1, |v↑|, |v↓|).
bool satisfies_rho(const RhoBC& r, const C2Vector& v_minus, const C2Vector& v_plus,
                   double tol = kDefaultTol) noexcept;

/// Probability current v† σx v = 2 Re(v↑* v↓).
double current(const C2Vector& v) noexcept;

/// e^{i(θ+π/2)} [[0, b2], [1/b2, 0]]: up and down spin swap across the junction.
AlphaBC make_spin_flip(double theta, double b2);

/// e^{iθ} diag(b1, 1/b1): a common phase, no spin flip.
AlphaBC make_phase_shift(double theta, double b1);

}  // namespace junction
