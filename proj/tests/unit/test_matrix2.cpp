#include <doctest.h>

#include <cmath>

#include "bridge.hpp"
#include "junction/matrix2.hpp"
#include "junction/sampling.hpp"

using namespace junction;

namespace {

const Complex I{0.0, 1.0};
const double kRoot2 = std::sqrt(2.0);

bool close(const QuaternionForm& a, const QuaternionForm& b, double tol = 1e-14) { return max_abs_diff(a, b) <= tol; }

}  // namespace

TEST_SUITE("matrix2") {
  TEST_CASE("arg and wrap conventions") {
    CHECK(arg_0_2pi(Complex{0.0, 0.0}) == 0.0);
    CHECK(arg_0_2pi(Complex{-1.0, -1e-300}) == doctest::Approx(kPi));
    CHECK(arg_0_2pi(-I) == doctest::Approx(1.5 * kPi));
    CHECK(wrap_angle(-kPi / 2) == doctest::Approx(1.5 * kPi));
    CHECK(wrap_angle(kTwoPi) == 0.0);
  }

  TEST_CASE("solve and inverse") {
    const C2Matrix a{2.0, 1.0, I, 3.0};
    const C2Vector b{1.0, -I};
    const C2Vector x = solve(a, b);
    CHECK(max_abs_diff(a * x, b) < 1e-15);
    CHECK(max_abs_diff(a * inverse(a), C2Matrix::identity()) < 1e-15);

    const auto hand = oracle::hand_solve(a.u11, a.u12, a.u21, a.u22, b.up, b.down);
    CHECK(std::abs(hand[0] - x.up) < 1e-15);
    CHECK(std::abs(hand[1] - x.down) < 1e-15);

    CHECK_THROWS_AS(solve(C2Matrix{1.0, 2.0, 2.0, 4.0}, b), Error);
  }

  TEST_CASE("is_unitary") {
    CHECK(is_unitary(C2Matrix::identity()));
    CHECK_FALSE(is_unitary(C2Matrix{1.0, 1.0, 0.0, 1.0}));
    CHECK(is_unitary((1.0 / kRoot2) * C2Matrix{1.0, 1.0, 1.0, -1.0}));
    CHECK_FALSE(is_unitary(C2Matrix{std::nan(""), 0.0, 0.0, 1.0}));
    CHECK(unitarity_residual(C2Matrix{INFINITY, 0.0, 0.0, 1.0}) == INFINITY);
  }

  TEST_CASE("is_su2") {
    CHECK(is_su2(C2Matrix::identity()));
    CHECK_FALSE(is_su2(C2Matrix::diagonal(I, 1.0)));
    CHECK(is_su2(C2Matrix{0.0, -1.0, 1.0, 0.0}));
  }

  TEST_CASE("is_diagonal") {
    CHECK(is_diagonal(C2Matrix::diagonal(I, -1.0)));
    CHECK_FALSE(is_diagonal(C2Matrix{0.0, 1.0, 1.0, 0.0}));
    CHECK(is_diagonal(C2Matrix{1.0, 1e-14, 0.0, 1.0}, 1e-12));
  }

  TEST_CASE("decompose_u2 examples") {
    CHECK(close(decompose_u2(C2Matrix::identity()), {1.0, 0.0, 1.0}));
    CHECK(close(decompose_u2(C2Matrix{0.0, -1.0, 1.0, 0.0}), {0.0, 1.0, 1.0}));
    const Complex e = std::polar(1.0, kPi / 4);
    CHECK(close(decompose_u2(C2Matrix::diagonal(I, 1.0)), {e, 0.0, e}));

    CHECK(decompose_u2_detailed(C2Matrix::identity()).branch == DecomposeBranch::Diagonal);
    CHECK(decompose_u2_detailed(C2Matrix{0.0, 1.0, 1.0, 0.0}).branch == DecomposeBranch::OffDiagonal);
  }

  TEST_CASE("decompose_u2 rejects non-unitary input") {
    try {
      decompose_u2(C2Matrix{1.0, 1.0, 0.0, 1.0});
      FAIL("expected NotUnitary");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnitary);
      CHECK(e.residual() > 0.5);
    }
  }

  TEST_CASE("compose examples") {
    CHECK(max_abs_diff(compose({1.0, 0.0, 1.0}), C2Matrix::identity()) == 0.0);
    CHECK(max_abs_diff(compose({0.0, 1.0, 1.0}), C2Matrix{0.0, -1.0, 1.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(compose({0.0, -I, I}), C2Matrix{0.0, 1.0, 1.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(compose({1.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(compose({1.0, 0.0, 2.0}), Error);
  }

  TEST_CASE("compose agrees with the hand formula") {
    Sampler rng(11);
    for (int i = 0; i < 100; ++i) {
      const QuaternionForm q = rng.quaternion_form();
      CHECK(oracle::max_diff(bridge::to_mat(compose(q)), oracle::compose(q.g1, q.g2, q.g3)) < 1e-15);
    }
  }

  TEST_CASE("round trip, sign pair and canonical form") {
    Sampler rng(kDefaultSeed);
    double worst = 0.0;
    double form = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const QuaternionForm q = rng.quaternion_form();
      const C2Matrix u = compose(q);
      CHECK(compose(-q) == u);
      const QuaternionForm d = decompose_u2(u);
      worst = std::max(worst, max_abs_diff(compose(d), u));
      form = std::max(form, form_residual(d));
      CHECK(arg_0_2pi(d.g3) < kPi);
      CHECK(max_abs_diff(d, canonicalize(q)) < 1e-12);
    }
    CHECK(worst <= 1e-12);
    CHECK(form <= 1e-12);
  }

  TEST_CASE("su2 structure") {
    Sampler rng(5);
    for (int i = 0; i < 200; ++i) {
      QuaternionForm q = rng.quaternion_form();
      q.g3 = 1.0;
      const C2Matrix u = compose(q);
      REQUIRE(is_su2(u));
      CHECK(std::abs(u.u22 - std::conj(u.u11)) < 1e-12);
      CHECK(std::abs(u.u12 + std::conj(u.u21)) < 1e-12);
    }
    CHECK_FALSE(is_su2(compose({1.0, 0.0, I})));
  }
}
