#include "junction/deficiency.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace junction {

namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t index(Island island) { return island == Island::Left ? 0 : 1; }
std::size_t index(Sign sign) { return sign == Sign::Plus ? 0 : 1; }

/// Composite Simpson rule on [a, b] with n (even) intervals.
template <typename F>
Complex simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  Complex sum = f(a) + f(b);
  for (int k = 1; k < n; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * f(a + k * h);
  return sum * (h / 3.0);
}

double half_extent(Mass m, double lambda, const QuadratureGrid& grid) {
  return lambda + grid.decay_lengths / m.root();
}

void check_grid(Mass m, const QuadratureGrid& grid) {
  if (grid.intervals < 2 || grid.intervals % 2 != 0) {
    throw Error(ErrorCode::QuadratureFailure, "Simpson grid needs an even number of intervals >= 2");
  }
  if (!(grid.decay_lengths > 0.0)) throw Error(ErrorCode::QuadratureFailure, "grid extent must be positive");
  const double tail = std::exp(-2.0 * grid.decay_lengths);
  if (tail > grid.max_tail) {
    std::ostringstream msg;
    msg << "truncated tail bound " << tail << " exceeds " << grid.max_tail;
    throw Error(ErrorCode::QuadratureFailure, msg.str(), tail);
  }
  // step must resolve the e^{2√(1+m²)x} integrand
  const double step = grid.decay_lengths / m.root() / grid.intervals;
  if (2.0 * m.root() * step > 0.05) {
    throw Error(ErrorCode::QuadratureFailure, "grid too coarse for the deficiency decay rate");
  }
}

C2Vector apply_dirac_operator(Mass m, const C2Vector& f, const C2Vector& df) {
  // σx ⊗ (−i d/dx) + m σz
  return {-kI * df.down + m.value() * f.up, -kI * df.up - m.value() * f.down};
}

}  // namespace

double face_scaled_normalization(Mass m, double lambda) {
  return std::pow(1.0 + m.value() * m.value(), 0.25) * std::exp(-m.root() * lambda);
}

DeficiencyFunction DeficiencyFunction::with_face_scaled_normalization(Island island, Sign sign, Mass m, double lambda) {
  return {island, sign, m, lambda, face_scaled_normalization(m, lambda)};
}

C2Vector DeficiencyFunction::direction() const noexcept {
  const Complex mu = mass.mu();
  if (island == Island::Left) return sign == Sign::Plus ? C2Vector{1.0, -mu} : C2Vector{1.0, std::conj(mu)};
  return sign == Sign::Plus ? C2Vector{1.0, mu} : C2Vector{1.0, -std::conj(mu)};
}

double DeficiencyFunction::face() const noexcept { return island == Island::Left ? -lambda : lambda; }

C2Vector DeficiencyFunction::profile(double x) const noexcept {
  const double rate = island == Island::Left ? mass.root() : -mass.root();
  return (normalization * std::exp(rate * x)) * direction();
}

C2Vector DeficiencyFunction::profile_derivative(double x) const noexcept {
  const double rate = island == Island::Left ? mass.root() : -mass.root();
  return rate * profile(x);
}

C2Vector eval_deficiency(const DeficiencyFunction& f, double x) noexcept {
  const bool inside = f.island == Island::Left ? x <= -f.lambda : x >= f.lambda;
  return inside ? f.profile(x) : C2Vector{};
}

C2Matrix deficiency_ode_matrix(Sign sign, Mass m) noexcept {
  const double s = sign == Sign::Plus ? -1.0 : 1.0;
  return {0.0, Complex{s, m.value()}, Complex{s, -m.value()}, 0.0};
}

double ode_residual(const SpinorField& f, Island island, Sign sign, Mass m, double lambda, double x, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "step h must be positive");
  const bool inside = island == Island::Left ? x + h < -lambda : x - h > lambda;
  if (!inside) {
    std::ostringstream msg;
    msg << "stencil [" << x - h << ", " << x + h << "] leaves the island";
    throw Error(ErrorCode::OutsideIsland, msg.str());
  }
  const C2Vector derivative = (1.0 / (2.0 * h)) * (f(x + h) - f(x - h));
  return max_abs_diff(derivative, deficiency_ode_matrix(sign, m) * f(x));
}

double ode_residual(const DeficiencyFunction& f, double x, double h) {
  return ode_residual([&f](double t) { return eval_deficiency(f, t); }, f.island, f.sign, f.mass, f.lambda, x, h);
}

int GramMatrix::rank(double rel_tol) const noexcept {
  const double a = entries[0][0];
  const double d = entries[1][1];
  const double b = 0.5 * (entries[0][1] + entries[1][0]);
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), b);
  const double hi = std::max(std::abs(mean + radius), std::abs(mean - radius));
  if (hi == 0.0) return 0;
  return (std::abs(mean + radius) > rel_tol * hi) + (std::abs(mean - radius) > rel_tol * hi);
}

GramMatrix gram_matrix(Sign sign, Mass m, double lambda, Normalization norm, const QuadratureGrid& grid) {
  check_grid(m, grid);
  const double n = norm == Normalization::FaceScaled ? face_scaled_normalization(m, lambda) : 1.0;
  const std::array<DeficiencyFunction, 2> basis = {
      DeficiencyFunction{Island::Left, sign, m, lambda, n},
      DeficiencyFunction{Island::Right, sign, m, lambda, n},
  };
  const double extent = half_extent(m, lambda, grid);

  // Restricting each function to its own island keeps the supports disjoint
  // even at Λ = 0, where the closed islands share the point x = 0.
  auto on = [](const DeficiencyFunction& f, Island island, double x) {
    return f.island == island ? f.profile(x) : C2Vector{};
  };

  GramMatrix gram;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& fi = basis[i];
      const auto& fj = basis[j];
      const Complex left = simpson([&](double x) { return inner(on(fi, Island::Left, x), on(fj, Island::Left, x)); },
                                   -extent, -lambda, grid.intervals);
      const Complex right = simpson([&](double x) { return inner(on(fi, Island::Right, x), on(fj, Island::Right, x)); },
                                    lambda, extent, grid.intervals);
      gram.entries[i][j] = (left + right).real();
    }
  }
  return gram;
}

Complex boundary_form(const BoundaryPair& psi, const BoundaryPair& phi) noexcept {
  const auto& p = psi.at_plus;
  const auto& q = phi.at_plus;
  const auto& pm = psi.at_minus;
  const auto& qm = phi.at_minus;
  return -kI * (std::conj(p.up) * q.down + std::conj(p.down) * q.up - std::conj(pm.up) * qm.down -
                std::conj(pm.down) * qm.up);
}

double Bump::envelope(double x) const noexcept {
  const double t = (x - center) / half_width;
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

double Bump::envelope_derivative(double x) const noexcept {
  const double t = (x - center) / half_width;
  if (std::abs(t) >= 1.0) return 0.0;
  const double q = 1.0 - t * t;
  return envelope(x) * (-2.0 * t / (q * q)) / half_width;
}

TrialFunction::TrialFunction(Mass m, double lambda) : mass_(m), lambda_(lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw Error(ErrorCode::InvalidArgument, "Lambda must be >= 0");
}

TrialFunction& TrialFunction::add(Complex coefficient, Island island, Sign sign) {
  coeffs_[index(island)][index(sign)] += coefficient;
  return *this;
}

TrialFunction& TrialFunction::add_bump(const Bump& bump) {
  const bool left = bump.center + bump.half_width < -lambda_;
  const bool right = bump.center - bump.half_width > lambda_;
  if (!(bump.half_width > 0.0) || !(left || right)) {
    throw Error(ErrorCode::InvalidArgument, "bump support must lie strictly inside one island");
  }
  bumps_.push_back(bump);
  return *this;
}

C2Vector TrialFunction::value(Island island, double x) const noexcept {
  C2Vector v;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const Complex c = coeffs_[index(island)][index(sign)];
    if (c != Complex{}) v = v + c * DeficiencyFunction{island, sign, mass_, lambda_, 1.0}.profile(x);
  }
  for (const Bump& b : bumps_) {
    const bool on_island = (b.center < 0.0) == (island == Island::Left);
    if (on_island) v = v + b.envelope(x) * b.amplitude;
  }
  return v;
}

C2Vector TrialFunction::apply_dirac(Island island, double x) const noexcept {
  C2Vector f;
  C2Vector df;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const Complex c = coeffs_[index(island)][index(sign)];
    if (c == Complex{}) continue;
    const DeficiencyFunction basis{island, sign, mass_, lambda_, 1.0};
    f = f + c * basis.profile(x);
    df = df + c * basis.profile_derivative(x);
  }
  for (const Bump& b : bumps_) {
    const bool on_island = (b.center < 0.0) == (island == Island::Left);
    if (!on_island) continue;
    f = f + b.envelope(x) * b.amplitude;
    df = df + b.envelope_derivative(x) * b.amplitude;
  }
  return apply_dirac_operator(mass_, f, df);
}

BoundaryPair TrialFunction::boundary_values() const noexcept {
  return {value(Island::Left, -lambda_), value(Island::Right, lambda_)};
}

Complex boundary_form_quadrature(const TrialFunction& psi, const TrialFunction& phi, const QuadratureGrid& grid) {
  if (!(psi.mass() == phi.mass()) || psi.lambda() != phi.lambda()) {
    throw Error(ErrorCode::InvalidArgument, "trial functions must share mass and Lambda");
  }
  const Mass m = psi.mass();
  const double lambda = psi.lambda();
  check_grid(m, grid);
  const double extent = half_extent(m, lambda, grid);
  const double step = (extent - lambda) / grid.intervals;

  for (const TrialFunction* f : {&psi, &phi}) {
    for (const Bump& b : f->bumps()) {
      if (std::abs(b.center) + b.half_width > extent) {
        throw Error(ErrorCode::QuadratureFailure, "bump support extends past the quadrature domain");
      }
      if (b.half_width < 50.0 * step) throw Error(ErrorCode::QuadratureFailure, "bump narrower than the grid resolves");
    }
  }

  auto integrand = [&](Island island) {
    return [&, island](double x) {
      return inner(psi.apply_dirac(island, x), phi.value(island, x)) -
             inner(psi.value(island, x), phi.apply_dirac(island, x));
    };
  };
  return simpson(integrand(Island::Left), -extent, -lambda, grid.intervals) +
         simpson(integrand(Island::Right), lambda, extent, grid.intervals);
}

TrialFunction random_trial_function(Sampler& rng, Mass m, double lambda, int bumps) {
  TrialFunction f(m, lambda);
  for (Island island : {Island::Left, Island::Right}) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) f.add(rng.complex_in_disk(), island, sign);
  }
  const double unit = 1.0 / m.root();
  for (int k = 0; k < bumps; ++k) {
    const double offset = rng.uniform(1.5, 3.0) * unit;
    const double width = rng.uniform(0.5, 1.0) * unit;
    const double center = rng.uniform(0.0, 1.0) < 0.5 ? -lambda - offset : lambda + offset;
    f.add_bump({rng.c2vector(), center, width});
  }
  return f;
}

namespace {

/// Boundary values of the domain of a separating condition on one face.
C2Vector rho_ray(const ExtendedReal& rho) {
  return rho.is_infinite() ? C2Vector{0.0, 1.0} : C2Vector{1.0, Complex{0.0, rho.value()}};
}

/// A face spinor violating the separating condition.
C2Vector rho_violation(const ExtendedReal& rho) {
  return rho.is_infinite() ? C2Vector{1.0, 0.0} : C2Vector{1.0, Complex{1.0, rho.value()}};
}

double pair_norm(const BoundaryPair& p) {
  return std::sqrt(std::norm(p.at_minus.up) + std::norm(p.at_minus.down) + std::norm(p.at_plus.up) +
                   std::norm(p.at_plus.down));
}

double max_form(const BoundaryPair& psi, const std::array<BoundaryPair, 2>& basis) {
  return std::max(std::abs(boundary_form(psi, basis[0])), std::abs(boundary_form(psi, basis[1])));
}

}  // namespace

SelfAdjointReport verify_selfadjoint_domain(const ExtensionClass& bc, std::size_t samples, std::uint64_t seed,
                                            double tol) {
  Sampler rng(seed);
  SelfAdjointReport report;
  report.samples = samples;
  report.tol = tol;

  std::array<BoundaryPair, 2> basis;
  std::array<BoundaryPair, 2> violating;
  std::function<BoundaryPair()> draw;

  if (const auto* alpha = std::get_if<AlphaBC>(&bc)) {
    require_class(*alpha);
    const AlphaBC a = *alpha;
    const C2Vector e1{1.0, 0.0};
    const C2Vector e2{0.0, 1.0};
    basis = {BoundaryPair{e1, apply_alpha(a, e1)}, BoundaryPair{e2, apply_alpha(a, e2)}};
    violating = {BoundaryPair{e1, C2Vector{}}, BoundaryPair{C2Vector{}, e1}};
    draw = [&rng, a] {
      const C2Vector v = rng.c2vector();
      return BoundaryPair{v, apply_alpha(a, v)};
    };
  } else {
    const RhoBC r = std::get<RhoBC>(bc);
    const C2Vector minus = rho_ray(r.rho_minus);
    const C2Vector plus = rho_ray(r.rho_plus);
    basis = {BoundaryPair{minus, C2Vector{}}, BoundaryPair{C2Vector{}, plus}};
    violating = {BoundaryPair{rho_violation(r.rho_minus), C2Vector{}},
                 BoundaryPair{C2Vector{}, rho_violation(r.rho_plus)}};
    draw = [&rng, minus, plus] {
      return BoundaryPair{rng.complex_in_disk() * minus, rng.complex_in_disk() * plus};
    };
  }

  for (std::size_t k = 0; k < samples; ++k) {
    const BoundaryPair psi = draw();
    const BoundaryPair phi = draw();
    const double scale = std::max(1.0, pair_norm(psi) * pair_norm(phi));
    report.max_symmetry_residual = std::max(report.max_symmetry_residual, std::abs(boundary_form(psi, phi)) / scale);
  }
  report.min_witness_form = std::min(max_form(violating[0], basis), max_form(violating[1], basis));
  return report;
}

}  // namespace junction
