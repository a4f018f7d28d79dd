#include "junction/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "junction/deficiency.hpp"

namespace junction {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_unimodular(Complex g, const char* name, double tol) {
  const double defect = std::abs(std::abs(g) - 1.0);
  if (!is_finite(g) || defect > tol) {
    std::ostringstream msg;
    msg << name << " is not unimodular (||g| - 1| = " << defect << ")";
    throw Error(ErrorCode::NotUnimodular, msg.str(), defect);
  }
}

/// tan(arg(g)/2) for unimodular g ≠ −1, without forming the angle.
double half_angle_tan(Complex g) noexcept {
  return g.real() >= 0.0 ? g.imag() / (1.0 + g.real()) : (1.0 - g.real()) / g.imag();
}

C2Vector face_value(Island island, Sign sign, Mass m, double lambda) {
  return DeficiencyFunction{island, sign, m, lambda, 1.0}.face_value();
}

/// Deficiency-function boundary spinors at the two faces.
struct FaceSpinors {
  C2Vector left_plus;    // ψ_L⁺(−Λ)
  C2Vector left_minus;   // ψ_L⁻(−Λ)
  C2Vector right_plus;   // ψ_R⁺(+Λ)
  C2Vector right_minus;  // ψ_R⁻(+Λ)
};

FaceSpinors face_spinors(Mass m, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw Error(ErrorCode::InvalidArgument, "Lambda must be >= 0");
  return {face_value(Island::Left, Sign::Plus, m, lambda), face_value(Island::Left, Sign::Minus, m, lambda),
          face_value(Island::Right, Sign::Plus, m, lambda), face_value(Island::Right, Sign::Minus, m, lambda)};
}

}  // namespace

RhoBC diagonal_u2_to_rho(Complex gL, Complex gR, Mass m, double tol) {
  require_unimodular(gL, "gamma_L", tol);
  require_unimodular(gR, "gamma_R", tol);
  const double s = m.root();
  auto face = [&](Complex g, double orientation) {
    if (std::abs(1.0 + g) <= tol) return ExtendedReal::plus_infinity();
    return ExtendedReal(orientation * (half_angle_tan(g) - m.value()) / s);
  };
  return {face(gR, -1.0), face(gL, 1.0)};
}

DiagonalPair rho_to_diagonal_u2(const RhoBC& r, Mass m) noexcept {
  const double s = m.root();
  auto gamma = [](const ExtendedReal& rho, double tangent) {
    if (rho.is_infinite()) return Complex{-1.0, 0.0};
    return std::polar(1.0, 2.0 * std::atan(tangent));
  };
  return {gamma(r.rho_minus, m.value() + s * r.rho_minus.value()),
          gamma(r.rho_plus, m.value() - s * r.rho_plus.value())};
}

AlphaBC u2_to_alpha(const QuaternionForm& q, Mass m, double tol) {
  const double defect = form_residual(q);
  if (!(defect <= tol)) throw Error(ErrorCode::InvalidForm, "quaternion form violates its norm constraints", defect);
  if (std::abs(q.g2) <= tol) {
    throw Error(ErrorCode::DiagonalInput, "gamma2 vanishes; the extension is separating", std::abs(q.g2));
  }
  const Complex mu = m.mu();
  const Complex mu2 = mu * mu;
  const Complex scale = m.root() / q.g2;
  const double im_g3_mu = (std::conj(q.g3) * mu).imag();
  return {
      kI * scale * ((std::conj(q.g1) * mu).imag() + im_g3_mu),
      scale * (q.g1.real() + q.g3.real()),
      scale * (-q.g1.real() + (std::conj(q.g3) * mu2).real()),
      kI * scale * ((q.g1 * mu).imag() + im_g3_mu),
  };
}

C2Matrix oracle_alpha_from_u2(const C2Matrix& u, Mass m, double lambda, double tol) {
  const double defect = unitarity_residual(u);
  if (!(defect <= tol)) throw Error(ErrorCode::NotUnitary, "U is not unitary", defect);
  const FaceSpinors f = face_spinors(m, lambda);

  // φ_L = ψ_L⁺ + u11 ψ_L⁻ + u12 ψ_R⁻ and φ_R = ψ_R⁺ + u21 ψ_L⁻ + u22 ψ_R⁻.
  const C2Matrix at_minus = C2Matrix::from_columns(f.left_plus + u.u11 * f.left_minus, u.u21 * f.left_minus);
  const C2Matrix at_plus = C2Matrix::from_columns(u.u12 * f.right_minus, f.right_plus + u.u22 * f.right_minus);
  return at_plus * inverse(at_minus, tol);
}

C2Matrix oracle_u2_from_alpha(const AlphaBC& a, Mass m, double lambda, double tol) {
  require_class(a, tol);
  const FaceSpinors f = face_spinors(m, lambda);
  const C2Matrix b = a.matrix();
  const C2Vector b_left_minus = b * f.left_minus;

  // φ_L(+Λ) = B φ_L(−Λ):  −u11 B ψ_L⁻ + u12 ψ_R⁻ = B ψ_L⁺
  const C2Vector row1 =
      solve(C2Matrix::from_columns(Complex{-1.0} * b_left_minus, f.right_minus), b * f.left_plus, tol);
  // φ_R(+Λ) = B φ_R(−Λ):  u21 B ψ_L⁻ − u22 ψ_R⁻ = ψ_R⁺
  const C2Vector row2 = solve(C2Matrix::from_columns(b_left_minus, Complex{-1.0} * f.right_minus), f.right_plus, tol);
  return {row1.up, row1.down, row2.up, row2.down};
}

QuaternionForm alpha_to_u2(const AlphaBC& a, Mass m, double tol) {
  const ClassReport report = validate_class(a, tol);
  if (!report.valid) require_class(a, tol);
  const C2Matrix u = oracle_u2_from_alpha(a, m, 0.0, tol);
  const double defect = unitarity_residual(u);
  const double allowed = tol * report.scale;
  if (!(defect <= allowed)) {
    std::ostringstream msg;
    msg << "solved U fails unitarity by " << defect;
    throw Error(ErrorCode::InternalInconsistency, msg.str(), defect);
  }
  return decompose_u2(u, allowed);
}

QuaternionForm printed_inverse_formula(const AlphaBC& a, Mass m, double tol) {
  const BDForm bd = alpha_to_bd(a, tol);
  const Complex mu = m.mu();
  const double s = m.root();
  const Complex x = -std::conj(mu) * a.a1 + a.a2 - a.a3 + mu * a.a4;
  const Complex y = a.a1 + std::conj(mu) * a.a2 + mu * a.a3 + a.a4;
  const double gamma0 = 1.0 / std::sqrt(4.0 / (s * s) + std::norm(x));
  const Complex phase = gamma0 * std::polar(1.0, -(bd.theta - kPi / 2.0));
  return {phase * x, (2.0 / s) * phase, phase * mu * std::conj(y)};
}

std::string_view to_string(PrintedAgreement a) noexcept {
  switch (a) {
    case PrintedAgreement::Exact: return "exact";
    case PrintedAgreement::SignPair: return "sign_pair";
    case PrintedAgreement::Mismatch: return "mismatch";
  }
  return "unknown";
}

InverseComparison compare_printed_inverse(const AlphaBC& a, Mass m, double tol) {
  InverseComparison c;
  c.primary = alpha_to_u2(a, m);
  c.printed = printed_inverse_formula(a, m);
  const double same = max_abs_diff(c.printed, c.primary);
  const double flipped = max_abs_diff(c.printed, -c.primary);
  c.deviation = std::min(same, flipped);
  if (same <= tol) {
    c.agreement = PrintedAgreement::Exact;
  } else if (flipped <= tol) {
    c.agreement = PrintedAgreement::SignPair;
  } else {
    c.agreement = PrintedAgreement::Mismatch;
  }
  return c;
}

ErrataSummary survey_printed_inverse(Sampler& rng, Mass m, std::size_t samples, std::size_t keep_examples) {
  ErrataSummary summary;
  summary.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const AlphaBC a = rng.alpha();
    const InverseComparison c = compare_printed_inverse(a, m);
    summary.max_printed_form_residual = std::max(summary.max_printed_form_residual, form_residual(c.printed));
    switch (c.agreement) {
      case PrintedAgreement::Exact: ++summary.exact; break;
      case PrintedAgreement::SignPair: ++summary.sign_pair; break;
      case PrintedAgreement::Mismatch:
        ++summary.mismatch;
        summary.max_mismatch_deviation = std::max(summary.max_mismatch_deviation, c.deviation);
        if (summary.mismatch_examples.size() < keep_examples) summary.mismatch_examples.push_back(a);
        break;
    }
  }
  return summary;
}

std::array<double, 4> inverse_identity_residuals(const AlphaBC& a, const QuaternionForm& q, Mass m) noexcept {
  const Complex mu = m.mu();
  const Complex mu_c = std::conj(mu);
  const Complex g1c = std::conj(q.g1);
  const Complex g2c = std::conj(q.g2);
  const Complex g3c = std::conj(q.g3);
  const Complex top = a.a1 + mu_c * a.a2;
  const Complex bottom = a.a3 + mu_c * a.a4;
  return {
      std::abs(top * q.g1 + g2c - g3c * (-a.a1 + mu * a.a2)),
      std::abs(top * q.g2 - g1c - g3c),
      std::abs(bottom * q.g1 - mu_c * g2c - g3c * (-a.a3 + mu * a.a4)),
      std::abs(bottom * q.g2 + mu_c * g1c - mu * g3c),
  };
}

ExtensionClass classify(const C2Matrix& u, Mass m, double tol) {
  const double defect = unitarity_residual(u);
  if (!(defect <= tol)) throw Error(ErrorCode::NotUnitary, "U is not unitary", defect);
  if (is_diagonal(u, tol)) return diagonal_u2_to_rho(u.u11, u.u22, m, tol);
  return u2_to_alpha(decompose_u2(u, tol), m, tol);
}

RhoBC oracle_rho_from_diagonal(Complex gL, Complex gR, Mass m, double lambda, double tol) {
  require_unimodular(gL, "gamma_L", tol);
  require_unimodular(gR, "gamma_R", tol);
  const FaceSpinors f = face_spinors(m, lambda);

  auto read = [&](const C2Vector& plus, const C2Vector& minus, Complex g) {
    const C2Vector v = plus + g * minus;
    if (std::abs(v.up) <= tol * std::max(1.0, std::abs(v.down))) return ExtendedReal::plus_infinity();
    const Complex ratio = v.down / v.up;
    if (std::abs(ratio.real()) > tol * std::max(1.0, std::abs(ratio))) {
      std::ostringstream msg;
      msg << "boundary spinor ratio has real part " << ratio.real();
      throw Error(ErrorCode::InternalInconsistency, msg.str(), std::abs(ratio.real()));
    }
    return ExtendedReal(ratio.imag());
  };
  // Scaling by e^{sΛ} removes the common decay factor before the ratio test.
  const double unscale = std::exp(m.root() * lambda);
  return {read(unscale * f.right_plus, unscale * f.right_minus, gR),
          read(unscale * f.left_plus, unscale * f.left_minus, gL)};
}

}  // namespace junction
