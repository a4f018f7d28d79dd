#include <doctest.h>

#include <cmath>
#include <limits>

#include "bridge.hpp"
#include "junction/boundary.hpp"
#include "junction/sampling.hpp"

using namespace junction;

namespace {

const Complex I{0.0, 1.0};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_SUITE("boundary") {
  TEST_CASE("extended reals") {
    CHECK(ExtendedReal(2.5).value() == 2.5);
    CHECK(ExtendedReal(std::numeric_limits<double>::infinity()).is_infinite());
    CHECK(ExtendedReal::plus_infinity() == ExtendedReal(INFINITY));
    CHECK(code_of([] { ExtendedReal(-INFINITY); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { ExtendedReal(std::nan("")); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("validate_class examples") {
    CHECK(validate_class({1.0, 0.0, 0.0, 1.0}).valid);
    CHECK(validate_class({0.0, 1.0, 1.0, 0.0}).valid);
    const ClassReport bad = validate_class({1.0, 0.0, 0.0, -1.0});
    CHECK_FALSE(bad.valid);
    CHECK(bad.residuals[4] == doctest::Approx(2.0));
    CHECK(ClassReport::kNames[bad.worst()] == "|a1 a4* + a2 a3* - 1|");
    CHECK(code_of([] { require_class({1.0, 1.0, 0.0, 1.0}); }) == ErrorCode::NotInClass);
    CHECK_FALSE(validate_class({std::nan(""), 0.0, 0.0, 1.0}).valid);
  }

  TEST_CASE("alpha_to_bd examples") {
    CHECK(equivalent(alpha_to_bd({1.0, 0.0, 0.0, 1.0}), {0.0, 1.0, 0.0, 0.0, 1.0}));
    const BDForm swap = alpha_to_bd({0.0, 1.0, 1.0, 0.0});
    CHECK(swap.theta == doctest::Approx(1.5 * kPi));
    CHECK(equivalent(swap, {1.5 * kPi, 0.0, 1.0, 1.0, 0.0}));
    CHECK(equivalent(alpha_to_bd({-I, 0.0, 0.0, -I}), {1.5 * kPi, 1.0, 0.0, 0.0, 1.0}));
    CHECK(code_of([] { alpha_to_bd({1.0, 0.0, 0.0, -1.0}); }) == ErrorCode::NotInClass);
  }

  TEST_CASE("bd_to_alpha examples") {
    CHECK(max_abs_diff(bd_to_alpha({0.0, 1.0, 0.0, 0.0, 1.0}), AlphaBC{1.0, 0.0, 0.0, 1.0}) < 1e-15);
    CHECK(max_abs_diff(bd_to_alpha({1.5 * kPi, 0.0, 1.0, 1.0, 0.0}), AlphaBC{0.0, 1.0, 1.0, 0.0}) < 1e-15);
    CHECK(max_abs_diff(bd_to_alpha({kPi / 2, 0.0, 1.0, 1.0, 0.0}), AlphaBC{0.0, -1.0, -1.0, 0.0}) < 1e-15);
    CHECK(code_of([] { bd_to_alpha({0.0, 1.0, 1.0, 1.0, 1.0}); }) == ErrorCode::InvalidBD);
    CHECK(code_of([] { bd_to_alpha({std::nan(""), 1.0, 0.0, 0.0, 1.0}); }) == ErrorCode::InvalidBD);
  }

  TEST_CASE("BD equivalence flip") {
    const BDForm f{0.3, 2.0, 0.5, -1.0, 0.75};
    CHECK(equivalent(f, {0.3 + kPi, -2.0, -0.5, 1.0, -0.75}));
    CHECK_FALSE(equivalent(f, {0.3 + kPi, 2.0, 0.5, -1.0, 0.75}));
  }

  TEST_CASE("invert_alpha") {
    CHECK(max_abs_diff(invert_alpha({1.0, 0.0, 0.0, 1.0}), AlphaBC{1.0, 0.0, 0.0, 1.0}) == 0.0);
    CHECK(max_abs_diff(invert_alpha({0.0, 1.0, 1.0, 0.0}), AlphaBC{0.0, 1.0, 1.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(invert_alpha({-I, 0.0, 0.0, -I}), AlphaBC{I, 0.0, 0.0, I}) == 0.0);
    CHECK(code_of([] { invert_alpha({2.0, 0.0, 0.0, 2.0}); }) == ErrorCode::NotInClass);

    Sampler rng(3);
    for (int i = 0; i < 1000; ++i) {
      const AlphaBC a = rng.alpha();
      const AlphaBC inv = invert_alpha(a);
      CHECK(validate_class(inv).valid);
      CHECK(max_abs_diff(a.matrix() * inv.matrix(), C2Matrix::identity()) < 1e-12);
    }
  }

  TEST_CASE("apply_alpha") {
    CHECK(apply_alpha({0.0, 1.0, 1.0, 0.0}, {1.0, 0.0}) == C2Vector{0.0, 1.0});
    CHECK(apply_alpha({-I, 0.0, 0.0, -I}, {1.0, 1.0}) == C2Vector{-I, -I});
    const C2Vector v{Complex{0.3, -2.0}, Complex{1.5, 0.25}};
    CHECK(apply_alpha({1.0, 0.0, 0.0, 1.0}, v) == v);
  }

  TEST_CASE("satisfies_rho") {
    const ExtendedReal zero(0.0);
    CHECK(satisfies_rho_face(zero, {1.0, 0.0}));
    CHECK(satisfies_rho_face(ExtendedReal::plus_infinity(), {0.0, 5.0}));
    CHECK(satisfies_rho_face(ExtendedReal(1.0), {1.0, I}));
    CHECK_FALSE(satisfies_rho_face(ExtendedReal(1.0), {1.0, -I}));
    CHECK_FALSE(satisfies_rho_face(ExtendedReal::plus_infinity(), {1.0, 0.0}));
    // The scale keeps tiny vectors from passing vacuously.
    CHECK_FALSE(satisfies_rho_face(zero, {1e-9, 1e-9}, 1e-10));
    CHECK(satisfies_rho({ExtendedReal(2.0), ExtendedReal(0.0)}, {1.0, 0.0}, {1.0, 2.0 * I}));
    CHECK_FALSE(satisfies_rho({ExtendedReal(2.0), ExtendedReal(0.0)}, {1.0, 0.0}, {1.0, 0.0}));
  }

  TEST_CASE("current") {
    CHECK(current({1.0, 1.0}) == 2.0);
    CHECK(current({1.0, 0.0}) == 0.0);
    CHECK(current({1.0, I}) == 0.0);
  }

  TEST_CASE("spin flip and phase shift constructors") {
    CHECK(max_abs_diff(make_spin_flip(-kPi / 2, 1.0), AlphaBC{0.0, 1.0, 1.0, 0.0}) < 1e-15);
    CHECK(max_abs_diff(make_phase_shift(0.0, 1.0), AlphaBC{1.0, 0.0, 0.0, 1.0}) < 1e-15);
    CHECK(max_abs_diff(make_phase_shift(-kPi / 2, 1.0), AlphaBC{-I, 0.0, 0.0, -I}) < 1e-15);
    CHECK(code_of([] { make_spin_flip(0.0, 0.0); }) == ErrorCode::ZeroParameter);
    CHECK(code_of([] { make_phase_shift(0.0, 0.0); }) == ErrorCode::ZeroParameter);
  }

  TEST_CASE("random instances: class, current form, BD round trips") {
    Sampler rng(kDefaultSeed);
    const oracle::Mat sx{{{0.0, 1.0}, {1.0, 0.0}}};
    for (int i = 0; i < 1000; ++i) {
      const BDForm f = rng.bd_form();
      const AlphaBC a = bd_to_alpha(f);
      REQUIRE(validate_class(a).valid);

      const oracle::Mat b = bridge::to_mat(a);
      CHECK(oracle::max_diff(oracle::mul(oracle::adjoint(b), oracle::mul(sx, b)), sx) < 1e-12);
      const C2Vector v = rng.c2vector();
      CHECK(std::abs(current(apply_alpha(a, v)) - current(v)) < 1e-12);

      CHECK(equivalent(alpha_to_bd(a), f, 1e-12));
      CHECK(max_abs_diff(bd_to_alpha(alpha_to_bd(a)), a) < 1e-12);
    }
  }
}
