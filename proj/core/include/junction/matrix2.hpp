#pragma once

// Dense complex 2x2 linear algebra and the U(1)·SU(2) factorization of U(2).

#include <complex>
#include <numbers>

#include "junction/error.hpp"

namespace junction {

using Complex = std::complex<double>;

/// Default tolerance for every membership predicate in the library.
inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Folds an angle into [0, 2π).
double wrap_angle(double theta) noexcept;

/// arg z in [0, 2π). arg 0 is 0.
double arg_0_2pi(Complex z) noexcept;

bool is_finite(Complex z) noexcept;

/// Two-component spinor; `up`/`down` are the σ_z = ±1 components.
struct C2Vector {
  Complex up{};
  Complex down{};

  friend C2Vector operator+(const C2Vector& a, const C2Vector& b) { return {a.up + b.up, a.down + b.down}; }
  friend C2Vector operator-(const C2Vector& a, const C2Vector& b) { return {a.up - b.up, a.down - b.down}; }
  friend C2Vector operator*(Complex s, const C2Vector& v) { return {s * v.up, s * v.down}; }
  friend C2Vector operator*(const C2Vector& v, Complex s) { return s * v; }
  friend bool operator==(const C2Vector&, const C2Vector&) = default;

  /// Euclidean norm.
  double norm() const noexcept;
  double max_abs() const noexcept;
  bool finite() const noexcept { return is_finite(up) && is_finite(down); }
};

/// Hermitian inner product <a|b> = a† b.
Complex inner(const C2Vector& a, const C2Vector& b) noexcept;

/// Max-norm of a - b.
double max_abs_diff(const C2Vector& a, const C2Vector& b) noexcept;

struct C2Matrix {
  Complex u11{};
  Complex u12{};
  Complex u21{};
  Complex u22{};

  static C2Matrix identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }
  static C2Matrix diagonal(Complex d1, Complex d2) noexcept { return {d1, 0.0, 0.0, d2}; }
  static C2Matrix from_columns(const C2Vector& c1, const C2Vector& c2) noexcept {
    return {c1.up, c2.up, c1.down, c2.down};
  }

  C2Vector column(int j) const noexcept { return j == 0 ? C2Vector{u11, u21} : C2Vector{u12, u22}; }
  C2Matrix adjoint() const noexcept;
  Complex det() const noexcept { return u11 * u22 - u12 * u21; }
  bool finite() const noexcept;

  friend C2Matrix operator+(const C2Matrix& a, const C2Matrix& b) noexcept;
  friend C2Matrix operator-(const C2Matrix& a, const C2Matrix& b) noexcept;
  friend C2Matrix operator*(const C2Matrix& a, const C2Matrix& b) noexcept;
  friend C2Matrix operator*(Complex s, const C2Matrix& a) noexcept;
  friend C2Vector operator*(const C2Matrix& a, const C2Vector& v) noexcept;
  friend bool operator==(const C2Matrix&, const C2Matrix&) = default;
};

/// Largest entry modulus.
double max_norm(const C2Matrix& m) noexcept;
double max_abs_diff(const C2Matrix& a, const C2Matrix& b) noexcept;

/// Solves A x = b by Cramer's rule. Throws SingularSystem when
/// |det A| <= rel_tol * |col1| * |col2|.
C2Vector solve(const C2Matrix& a, const C2Vector& b, double rel_tol = kDefaultTol);

/// Inverse with the same singularity test as solve().
C2Matrix inverse(const C2Matrix& a, double rel_tol = kDefaultTol);

/// max(‖M†M − I‖_max, ‖MM† − I‖_max); +inf for non-finite input.
double unitarity_residual(const C2Matrix& m) noexcept;

bool is_unitary(const C2Matrix& m, double tol = kDefaultTol) noexcept;
bool is_su2(const C2Matrix& m, double tol = kDefaultTol) noexcept;
bool is_diagonal(const C2Matrix& m, double tol = kDefaultTol) noexcept;

/// U = g3 · [[g1, −g2*], [g2, g1*]] with |g1|² + |g2|² = |g3| = 1.
///
/// The triples (g1, g2, g3) and (−g1, −g2, −g3) compose to the same matrix.
/// decompose_u2 returns the member with arg g3 in [0, π).
struct QuaternionForm {
  Complex g1{1.0};
  Complex g2{};
  Complex g3{1.0};

  QuaternionForm operator-() const noexcept { return {-g1, -g2, -g3}; }
  friend bool operator==(const QuaternionForm&, const QuaternionForm&) = default;
};

/// max(| |g1|²+|g2|² − 1 |, | |g3| − 1 |).
double form_residual(const QuaternionForm& q) noexcept;

/// Largest componentwise modulus difference.
double max_abs_diff(const QuaternionForm& a, const QuaternionForm& b) noexcept;

/// Picks the sign-pair member with arg g3 in [0, π).
QuaternionForm canonicalize(const QuaternionForm& q) noexcept;

/// Which construction produced the SU(2) factor: the phase e^{i(θ12+θ21+π)/2}
/// when u21 is nonzero, or e^{i(θ11+θ22)/2} when u21 vanishes.
enum class DecomposeBranch { OffDiagonal, Diagonal };

struct U2Decomposition {
  QuaternionForm form;
  DecomposeBranch branch;
};

U2Decomposition decompose_u2_detailed(const C2Matrix& m, double tol = kDefaultTol);

/// Factorizes a unitary M as g3 · SU(2) element. Throws NotUnitary.
QuaternionForm decompose_u2(const C2Matrix& m, double tol = kDefaultTol);

/// Inverse of decompose_u2. Throws InvalidForm when the norm constraints
/// fail beyond tol.
C2Matrix compose(const QuaternionForm& q, double tol = kDefaultTol);

}  // namespace junction
