#include "junction/sampling.hpp"

#include <cmath>

namespace junction {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

double Sampler::signed_log_uniform(double decades) {
  const double magnitude = std::pow(10.0, uniform(-decades, decades));
  return std::bernoulli_distribution(0.5)(engine_) ? magnitude : -magnitude;
}

Complex Sampler::unit_complex() { return std::polar(1.0, uniform(0.0, kTwoPi)); }

Complex Sampler::complex_in_disk() { return std::polar(std::sqrt(uniform(0.0, 1.0)), uniform(0.0, kTwoPi)); }

C2Vector Sampler::c2vector() { return {complex_in_disk(), complex_in_disk()}; }

QuaternionForm Sampler::quaternion_form() {
  double x[4];
  double n = 0.0;
  do {
    n = 0.0;
    for (double& xi : x) {
      xi = normal();
      n += xi * xi;
    }
  } while (n < 1e-12);
  n = std::sqrt(n);
  return {Complex{x[0] / n, x[1] / n}, Complex{x[2] / n, x[3] / n}, unit_complex()};
}

C2Matrix Sampler::unitary() { return compose(quaternion_form()); }

C2Matrix Sampler::non_diagonal_unitary(double min_offdiag) {
  for (;;) {
    const C2Matrix u = unitary();
    if (std::abs(u.u21) >= min_offdiag) return u;
  }
}

C2Matrix Sampler::diagonal_unitary() { return C2Matrix::diagonal(unit_complex(), unit_complex()); }

BDForm Sampler::bd_form() {
  const double theta = uniform(0.0, kTwoPi);
  const double b2 = signed_log_uniform();
  if (std::uniform_int_distribution<int>(0, 7)(engine_) == 0) {
    return {theta, 0.0, b2, 1.0 / b2, signed_log_uniform()};
  }
  const double b3 = signed_log_uniform();
  const double b1 = signed_log_uniform();
  return {theta, b1, b2, b3, (1.0 - b2 * b3) / b1};
}

AlphaBC Sampler::alpha() { return bd_to_alpha(bd_form()); }

RhoBC Sampler::rho() {
  auto face = [this] {
    if (std::uniform_int_distribution<int>(0, 7)(engine_) == 0) return ExtendedReal::plus_infinity();
    return ExtendedReal(uniform(-5.0, 5.0));
  };
  ExtendedReal plus = face();
  ExtendedReal minus = face();
  return {plus, minus};
}

}  // namespace junction
