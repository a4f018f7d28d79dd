#pragma once

// Maps between U(2) extension parameters and boundary conditions.
//
// Diagonal U gives a separating condition, non-diagonal U a transmitting one.
// The boundary-value oracles solve the defining linear systems directly and
// serve as ground truth for the closed-form maps.

#include <array>
#include <cstddef>
#include <vector>

#include "junction/boundary.hpp"
#include "junction/mass.hpp"
#include "junction/sampling.hpp"

namespace junction {

struct DiagonalPair {
  Complex gL{1.0};
  Complex gR{1.0};
};

/// ρ₋ = (tan(θ_L/2) − m)/√(1+m²), ρ₊ = −(tan(θ_R/2) − m)/√(1+m²), θ = arg γ ∈ [0, 2π).
/// |1 + γ| <= tol maps to +∞. Throws NotUnimodular.
RhoBC diagonal_u2_to_rho(Complex gL, Complex gR, Mass m, double tol = kDefaultTol);

/// γ_L = exp(2i atan(m + √(1+m²)ρ₋)), γ_R = exp(2i atan(m − √(1+m²)ρ₊)); +∞ gives −1.
DiagonalPair rho_to_diagonal_u2(const RhoBC& r, Mass m) noexcept;

/// Closed form for non-diagonal U. Throws InvalidForm, DiagonalInput when |g2| <= tol.
AlphaBC u2_to_alpha(const QuaternionForm& q, Mass m, double tol = kDefaultTol);

/// Boundary matrix V with φ_j(+Λ) = V φ_j(−Λ) for the domain elements
/// φ_j = ψ_j⁺ + Uψ_j⁺. Throws NotUnitary, SingularSystem (diagonal U).
C2Matrix oracle_alpha_from_u2(const C2Matrix& u, Mass m, double lambda = 0.0, double tol = kDefaultTol);

/// The unitary whose domain elements satisfy ψ(+Λ) = B_α ψ(−Λ), obtained by
/// solving for the coefficients of ψ_j⁻ in each φ_j. Throws NotInClass.
C2Matrix oracle_u2_from_alpha(const AlphaBC& a, Mass m, double lambda = 0.0, double tol = kDefaultTol);

/// decompose_u2 of the oracle unitary. Throws NotInClass, and
/// InternalInconsistency when the solved matrix is not unitary.
QuaternionForm alpha_to_u2(const AlphaBC& a, Mass m, double tol = kDefaultTol);

/// The published closed-form inverse, evaluated literally with θ from alpha_to_bd.
/// Throws NotInClass.
QuaternionForm printed_inverse_formula(const AlphaBC& a, Mass m, double tol = kDefaultTol);

enum class PrintedAgreement { Exact, SignPair, Mismatch };

std::string_view to_string(PrintedAgreement a) noexcept;

struct InverseComparison {
  QuaternionForm primary;
  QuaternionForm printed;
  PrintedAgreement agreement = PrintedAgreement::Mismatch;
  /// min over the sign pair of max_abs_diff(printed, ±primary).
  double deviation = 0.0;
};

InverseComparison compare_printed_inverse(const AlphaBC& a, Mass m, double tol = 1e-9);

struct ErrataSummary {
  std::size_t samples = 0;
  std::size_t exact = 0;
  std::size_t sign_pair = 0;
  std::size_t mismatch = 0;
  /// Largest form_residual of the printed triple; it should stay a U(2) element.
  double max_printed_form_residual = 0.0;
  double max_mismatch_deviation = 0.0;
  /// The first few mismatching inputs.
  std::vector<AlphaBC> mismatch_examples;
};

ErrataSummary survey_printed_inverse(Sampler& rng, Mass m, std::size_t samples, std::size_t keep_examples = 5);

/// Residuals of the four linear relations tying (α, γ) together when
/// D(H_U) = D(H_α):
///
///   (α1 + μ*α2)γ1 + γ2* − γ3*(−α1 + μα2)
///   (α1 + μ*α2)γ2 − γ1* − γ3*
///   (α3 + μ*α4)γ1 − μ*γ2* − γ3*(−α3 + μα4)
///   (α3 + μ*α4)γ2 + μ*γ1* − μγ3*
std::array<double, 4> inverse_identity_residuals(const AlphaBC& a, const QuaternionForm& q, Mass m) noexcept;

/// Separating for diagonal U, transmitting otherwise. Throws NotUnitary.
ExtensionClass classify(const C2Matrix& u, Mass m, double tol = kDefaultTol);

/// ρ read off the boundary spinors of ψ_L⁺ + γ_L ψ_L⁻ at −Λ and
/// ψ_R⁺ + γ_R ψ_R⁻ at +Λ. Throws NotUnimodular, and InternalInconsistency
/// when a spinor ratio is not purely imaginary.
RhoBC oracle_rho_from_diagonal(Complex gL, Complex gR, Mass m, double lambda = 0.0, double tol = kDefaultTol);

}  // namespace junction
