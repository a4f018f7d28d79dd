#include "junction/matrix2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace junction {

double wrap_angle(double theta) noexcept {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a value just below a multiple of 2π can round up to 2π itself
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double arg_0_2pi(Complex z) noexcept {
  if (z == Complex{}) return 0.0;
  return wrap_angle(std::arg(z));
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double C2Vector::norm() const noexcept { return std::sqrt(std::norm(up) + std::norm(down)); }

double C2Vector::max_abs() const noexcept { return std::max(std::abs(up), std::abs(down)); }

Complex inner(const C2Vector& a, const C2Vector& b) noexcept {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

double max_abs_diff(const C2Vector& a, const C2Vector& b) noexcept { return (a - b).max_abs(); }

C2Matrix C2Matrix::adjoint() const noexcept {
  return {std::conj(u11), std::conj(u21), std::conj(u12), std::conj(u22)};
}

bool C2Matrix::finite() const noexcept {
  return is_finite(u11) && is_finite(u12) && is_finite(u21) && is_finite(u22);
}

C2Matrix operator+(const C2Matrix& a, const C2Matrix& b) noexcept {
  return {a.u11 + b.u11, a.u12 + b.u12, a.u21 + b.u21, a.u22 + b.u22};
}

C2Matrix operator-(const C2Matrix& a, const C2Matrix& b) noexcept {
  return {a.u11 - b.u11, a.u12 - b.u12, a.u21 - b.u21, a.u22 - b.u22};
}

C2Matrix operator*(const C2Matrix& a, const C2Matrix& b) noexcept {
  return {a.u11 * b.u11 + a.u12 * b.u21, a.u11 * b.u12 + a.u12 * b.u22,
          a.u21 * b.u11 + a.u22 * b.u21, a.u21 * b.u12 + a.u22 * b.u22};
}

C2Matrix operator*(Complex s, const C2Matrix& a) noexcept {
  return {s * a.u11, s * a.u12, s * a.u21, s * a.u22};
}

C2Vector operator*(const C2Matrix& a, const C2Vector& v) noexcept {
  return {a.u11 * v.up + a.u12 * v.down, a.u21 * v.up + a.u22 * v.down};
}

double max_norm(const C2Matrix& m) noexcept {
  return std::max({std::abs(m.u11), std::abs(m.u12), std::abs(m.u21), std::abs(m.u22)});
}

double max_abs_diff(const C2Matrix& a, const C2Matrix& b) noexcept { return max_norm(a - b); }

namespace {

Complex checked_det(const C2Matrix& a, double rel_tol) {
  const Complex d = a.det();
  const double scale = a.column(0).norm() * a.column(1).norm();
  if (!(std::abs(d) > rel_tol * scale)) {
    std::ostringstream msg;
    msg << "2x2 system is singular (|det| = " << std::abs(d) << ", column scale " << scale << ")";
    throw Error(ErrorCode::SingularSystem, msg.str(), std::abs(d));
  }
  return d;
}

}  // namespace

C2Vector solve(const C2Matrix& a, const C2Vector& b, double rel_tol) {
  const Complex d = checked_det(a, rel_tol);
  return {(b.up * a.u22 - a.u12 * b.down) / d, (a.u11 * b.down - a.u21 * b.up) / d};
}

C2Matrix inverse(const C2Matrix& a, double rel_tol) {
  const Complex d = checked_det(a, rel_tol);
  return {a.u22 / d, -a.u12 / d, -a.u21 / d, a.u11 / d};
}

double unitarity_residual(const C2Matrix& m) noexcept {
  if (!m.finite()) return std::numeric_limits<double>::infinity();
  const C2Matrix id = C2Matrix::identity();
  return std::max(max_abs_diff(m.adjoint() * m, id), max_abs_diff(m * m.adjoint(), id));
}

bool is_unitary(const C2Matrix& m, double tol) noexcept { return unitarity_residual(m) <= tol; }

bool is_su2(const C2Matrix& m, double tol) noexcept {
  return is_unitary(m, tol) && std::abs(m.det() - 1.0) <= tol;
}

bool is_diagonal(const C2Matrix& m, double tol) noexcept {
  return std::abs(m.u12) <= tol && std::abs(m.u21) <= tol;
}

double form_residual(const QuaternionForm& q) noexcept {
  if (!is_finite(q.g1) || !is_finite(q.g2) || !is_finite(q.g3)) {
    return std::numeric_limits<double>::infinity();
  }
  return std::max(std::abs(std::norm(q.g1) + std::norm(q.g2) - 1.0), std::abs(std::abs(q.g3) - 1.0));
}

double max_abs_diff(const QuaternionForm& a, const QuaternionForm& b) noexcept {
  return std::max({std::abs(a.g1 - b.g1), std::abs(a.g2 - b.g2), std::abs(a.g3 - b.g3)});
}

QuaternionForm canonicalize(const QuaternionForm& q) noexcept {
  return arg_0_2pi(q.g3) < kPi ? q : -q;
}

U2Decomposition decompose_u2_detailed(const C2Matrix& m, double tol) {
  const double residual = unitarity_residual(m);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary (residual " << residual << ", tol " << tol << ")";
    throw Error(ErrorCode::NotUnitary, msg.str(), residual);
  }

  // det U = e^{i(θ12+θ21+π)} when u21 ≠ 0 and e^{i(θ11+θ22)} otherwise; the
  // half-phase strips U down to SU(2).
  const bool off_diagonal = std::abs(m.u21) > tol;
  const double half_phase = off_diagonal ? 0.5 * (arg_0_2pi(m.u12) + arg_0_2pi(m.u21) + kPi)
                                         : 0.5 * (arg_0_2pi(m.u11) + arg_0_2pi(m.u22));
  const Complex g3 = std::polar(1.0, half_phase);
  const Complex g3_inv = std::conj(g3);

  QuaternionForm form{g3_inv * m.u11, g3_inv * m.u21, g3};
  return {canonicalize(form), off_diagonal ? DecomposeBranch::OffDiagonal : DecomposeBranch::Diagonal};
}

QuaternionForm decompose_u2(const C2Matrix& m, double tol) { return decompose_u2_detailed(m, tol).form; }

C2Matrix compose(const QuaternionForm& q, double tol) {
  const double residual = form_residual(q);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "quaternion form violates |g1|^2+|g2|^2 = |g3| = 1 (residual " << residual << ")";
    throw Error(ErrorCode::InvalidForm, msg.str(), residual);
  }
  return q.g3 * C2Matrix{q.g1, -std::conj(q.g2), q.g2, std::conj(q.g1)};
}

}  // namespace junction
