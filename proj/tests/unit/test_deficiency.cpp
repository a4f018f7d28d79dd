#include <doctest.h>

#include <cmath>

#include "bridge.hpp"
#include "junction/deficiency.hpp"

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

BoundaryPair pair(C2Vector minus, C2Vector plus) { return {minus, plus}; }

}  // namespace

TEST_SUITE("deficiency") {
  TEST_CASE("eval_deficiency examples") {
    const Mass m0(0.0);
    CHECK(eval_deficiency({Island::Left, Sign::Plus, m0, 0.0, 1.0}, 0.0) == C2Vector{1.0, -1.0});
    for (double x : {-3.0, -0.5, -1e-9}) {
      CHECK(eval_deficiency({Island::Right, Sign::Plus, m0, 0.0, 1.0}, x) == C2Vector{});
    }
    const Mass m1(1.0);
    const Complex mu = Complex{1.0, 1.0} / std::sqrt(2.0);
    CHECK(std::abs(m1.mu() - mu) < 1e-16);
    const C2Vector v = eval_deficiency({Island::Right, Sign::Minus, m1, 0.5, 1.0}, 0.5);
    CHECK(max_abs_diff(v, std::exp(-std::sqrt(2.0) * 0.5) * C2Vector{1.0, -std::conj(mu)}) < 1e-15);
    // Inside the junction everything vanishes.
    for (Island island : {Island::Left, Island::Right}) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        CHECK(eval_deficiency({island, sign, m1, 1.0, 1.0}, 0.3) == C2Vector{});
      }
    }
  }

  TEST_CASE("ode residual examples") {
    const DeficiencyFunction f{Island::Left, Sign::Plus, Mass(0.0), 0.0, 1.0};
    CHECK(ode_residual(f, -1.0, 1e-4) <= 1e-7);

    const SpinorField probe = [](double x) { return x <= 0.0 ? C2Vector{std::exp(x), 0.0} : C2Vector{}; };
    CHECK(ode_residual(probe, Island::Left, Sign::Plus, Mass(0.0), 0.0, -1.0, 1e-4) > 0.3);

    CHECK(code_of([&] { ode_residual(f, -0.5, 1.0); }) == ErrorCode::OutsideIsland);
    CHECK(code_of([&] { ode_residual(f, -1.0, 0.0); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("ode residual converges at second order") {
    for (double m : {0.0, 0.5, 1.0, 10.0}) {
      const Mass mass(m);
      const double x0 = 1.0 + 0.5 / mass.root();
      for (Island island : {Island::Left, Island::Right}) {
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
          const DeficiencyFunction f{island, sign, mass, 1.0, 1.0};
          const double x = island == Island::Left ? -x0 : x0;
          const double h = 1e-2 / mass.root();
          const double ratio = ode_residual(f, x, h) / ode_residual(f, x, h / 2);
          CAPTURE(m);
          CHECK(ratio == doctest::Approx(4.0).epsilon(0.025));
        }
      }
    }
  }

  TEST_CASE("deficiency ODE matrix carries the eigenvalue") {
    // With ψ' = Aψ the Dirac operator −iσxψ' + mσzψ must return ±iψ.
    Sampler rng(2);
    for (double m : {0.0, 1.0, 10.0}) {
      for (Island island : {Island::Left, Island::Right}) {
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
          TrialFunction t(Mass(m), 0.5);
          t.add(1.0, island, sign);
          const double x = island == Island::Left ? -1.0 : 1.0;
          const C2Vector psi = t.value(island, x);
          const Complex z = sign == Sign::Plus ? I : -I;
          CHECK(max_abs_diff(t.apply_dirac(island, x), z * psi) < 1e-12 * std::max(1.0, psi.max_abs()));
        }
      }
    }
  }

  TEST_CASE("gram matrix") {
    const GramMatrix g0 = gram_matrix(Sign::Plus, Mass(0.0), 0.0, Normalization::FaceScaled);
    CHECK(g0.entries[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g0.entries[1][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g0.entries[0][1] == 0.0);
    CHECK(g0.entries[1][0] == 0.0);

    const GramMatrix g1 = gram_matrix(Sign::Minus, Mass(0.0), 1.0, Normalization::FaceScaled);
    CHECK(g1.entries[0][0] == doctest::Approx(std::exp(-4.0)).epsilon(1e-12));
    CHECK(g1.entries[1][1] == doctest::Approx(std::exp(-4.0)).epsilon(1e-12));

    for (double m : {0.0, 0.5, 1.0, 10.0}) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const GramMatrix g = gram_matrix(sign, Mass(m), 0.75);
        // Unit normalization: ‖(1, ·)‖² = 2 integrated against e^{−2s|x|} over a half line.
        const double expected = 2.0 * std::exp(-2.0 * Mass(m).root() * 0.75) / (2.0 * Mass(m).root());
        CHECK(g.entries[0][0] == doctest::Approx(expected).epsilon(1e-12));
        CHECK(g.entries[0][1] == 0.0);
        CHECK(g.rank() == 2);
      }
    }
    CHECK(GramMatrix{}.rank() == 0);
    CHECK(GramMatrix{{{{1.0, 1.0}, {1.0, 1.0}}}}.rank() == 1);
  }

  TEST_CASE("quadrature grid validation") {
    CHECK(code_of([] { gram_matrix(Sign::Plus, Mass(0.0), 0.0, Normalization::Unit, {5.0, 20000, 1e-30}); }) ==
          ErrorCode::QuadratureFailure);
    CHECK(code_of([] { gram_matrix(Sign::Plus, Mass(0.0), 0.0, Normalization::Unit, {40.0, 101, 1e-30}); }) ==
          ErrorCode::QuadratureFailure);
    CHECK(code_of([] { gram_matrix(Sign::Plus, Mass(0.0), 0.0, Normalization::Unit, {40.0, 100, 1e-30}); }) ==
          ErrorCode::QuadratureFailure);
  }

  TEST_CASE("boundary form examples") {
    CHECK(boundary_form(pair({}, {}), pair({}, {})) == Complex{});
    CHECK(boundary_form(pair({}, {1.0, 0.0}), pair({}, {0.0, 1.0})) == -I);
    CHECK(boundary_form(pair({1.0, 0.0}, {1.0, 0.0}), pair({0.0, 1.0}, {0.0, 1.0})) == Complex{});

    Sampler rng(6);
    for (int i = 0; i < 100; ++i) {
      const C2Vector a = rng.c2vector(), b = rng.c2vector(), c = rng.c2vector(), d = rng.c2vector();
      const Complex o = oracle::boundary_form(bridge::to_vec(a), bridge::to_vec(b), bridge::to_vec(c), bridge::to_vec(d));
      CHECK(std::abs(boundary_form(pair(a, b), pair(c, d)) - o) < 1e-15);
    }
  }

  TEST_CASE("Green identity: single deficiency function") {
    for (double m : {0.0, 1.0}) {
      for (double lambda : {0.0, 1.0}) {
        TrialFunction psi(Mass(m), lambda);
        psi.add(1.0, Island::Left, Sign::Plus);
        const Complex quad = boundary_form_quadrature(psi, psi);
        const double norm2 = gram_matrix(Sign::Plus, Mass(m), lambda).entries[0][0];
        CHECK(std::abs(quad - Complex{0.0, -2.0 * norm2}) < 1e-10);
        const BoundaryPair bv = psi.boundary_values();
        CHECK(std::abs(quad - boundary_form(bv, bv)) < 1e-10);
      }
    }
  }

  TEST_CASE("Green identity: disjoint islands and bumps") {
    TrialFunction psi(Mass(0.0), 1.0);
    TrialFunction phi(Mass(0.0), 1.0);
    psi.add_bump({{1.0, I}, -3.0, 0.8});
    phi.add_bump({{0.5, 1.0}, 3.0, 0.8});
    CHECK(std::abs(boundary_form_quadrature(psi, phi)) < 1e-14);
    CHECK(code_of([&] { psi.add_bump({{1.0, 0.0}, -1.2, 0.5}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { boundary_form_quadrature(psi, TrialFunction(Mass(1.0), 1.0)); }) ==
          ErrorCode::InvalidArgument);
    TrialFunction far(Mass(0.0), 1.0);
    far.add_bump({{1.0, 0.0}, 60.0, 1.0});
    CHECK(code_of([&] { boundary_form_quadrature(far, far); }) == ErrorCode::QuadratureFailure);
  }

  TEST_CASE("Green identity: random combinations") {
    Sampler rng(kDefaultSeed);
    double worst = 0.0;
    for (double m : {0.0, 1.0}) {
      for (double lambda : {0.0, 1.0}) {
        for (int i = 0; i < 5; ++i) {
          const TrialFunction psi = random_trial_function(rng, Mass(m), lambda);
          const TrialFunction phi = random_trial_function(rng, Mass(m), lambda);
          const Complex quad = boundary_form_quadrature(psi, phi);
          worst = std::max(worst, std::abs(quad - boundary_form(psi.boundary_values(), phi.boundary_values())));
        }
      }
    }
    CHECK(worst <= 1e-8);
  }

  TEST_CASE("verify_selfadjoint_domain") {
    const SelfAdjointReport swap = verify_selfadjoint_domain(AlphaBC{0.0, 1.0, 1.0, 0.0}, 100);
    CHECK(swap.max_symmetry_residual <= 1e-12);
    CHECK(swap.passed());
    const SelfAdjointReport sep = verify_selfadjoint_domain(RhoBC{ExtendedReal(0.0), ExtendedReal(0.0)}, 100);
    CHECK(sep.max_symmetry_residual <= 1e-12);
    CHECK(sep.passed());
    const SelfAdjointReport inf =
        verify_selfadjoint_domain(RhoBC{ExtendedReal::plus_infinity(), ExtendedReal(-2.0)}, 100);
    CHECK(inf.passed());

    // Witness: ψ₊ = (1, 0), ψ₋ = 0 against φ = ((0, 1), (0, 1)) for B = I.
    CHECK(std::abs(boundary_form(pair({}, {1.0, 0.0}), pair({0.0, 1.0}, {0.0, 1.0}))) > 0.0);

    CHECK(code_of([] { verify_selfadjoint_domain(AlphaBC{1.0, 1.0, 0.0, 1.0}, 10); }) == ErrorCode::NotInClass);

    Sampler rng(9);
    for (int i = 0; i < 50; ++i) {
      CHECK(verify_selfadjoint_domain(rng.alpha(), 20, 100 + i).passed());
      CHECK(verify_selfadjoint_domain(rng.rho(), 20, 200 + i).passed());
    }
  }
}
