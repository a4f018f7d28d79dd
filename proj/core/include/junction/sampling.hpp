#pragma once

// Seeded random instances for fuzzing and property tests.

#include <cstdint>
#include <random>

#include "junction/boundary.hpp"

namespace junction {

inline constexpr std::uint64_t kDefaultSeed = 20130826;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  /// Magnitude 10^u, u uniform in [-decades, decades], random sign.
  double signed_log_uniform(double decades = kLogDecades);

  Complex unit_complex();
  /// Entries with modulus at most 1.
  Complex complex_in_disk();
  C2Vector c2vector();

  /// Uniform on S³ × S¹; not canonicalized.
  QuaternionForm quaternion_form();
  C2Matrix unitary();
  /// Unitary with |u21| >= min_offdiag.
  C2Matrix non_diagonal_unitary(double min_offdiag = 1e-6);
  C2Matrix diagonal_unitary();

  /// θ uniform, b2 and b3 log-uniform, b1 log-uniform, b4 = (1 − b2 b3)/b1.
  /// One draw in eight instead takes b1 = 0, b3 = 1/b2 and a free b4.
  BDForm bd_form();
  AlphaBC alpha();

  /// Each face is +∞ with probability 1/8, else uniform in [-5, 5].
  RhoBC rho();

  std::mt19937_64& engine() noexcept { return engine_; }

  /// Half-width (in decades) of the log-uniform law for BD coefficients.
  static constexpr double kLogDecades = 0.30103;  // magnitudes in [1/2, 2]

 private:
  std::mt19937_64 engine_;
};

}  // namespace junction
