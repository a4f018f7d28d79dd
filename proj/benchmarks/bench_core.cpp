#include <benchmark/benchmark.h>

#include <vector>

#include "junction/correspondence.hpp"
#include "junction/deficiency.hpp"
#include "junction/sampling.hpp"
#include "junction/scattering.hpp"

namespace {

using namespace junction;

constexpr std::size_t kPool = 256;

std::vector<C2Matrix> unitaries() {
  Sampler rng;
  std::vector<C2Matrix> out;
  for (std::size_t i = 0; i < kPool; ++i) out.push_back(rng.non_diagonal_unitary());
  return out;
}

std::vector<AlphaBC> alphas() {
  Sampler rng;
  std::vector<AlphaBC> out;
  for (std::size_t i = 0; i < kPool; ++i) out.push_back(rng.alpha());
  return out;
}

void BM_DecomposeU2(benchmark::State& state) {
  const auto pool = unitaries();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_u2(pool[i++ % kPool]));
}
BENCHMARK(BM_DecomposeU2);

void BM_U2ToAlpha(benchmark::State& state) {
  std::vector<QuaternionForm> pool;
  for (const C2Matrix& u : unitaries()) pool.push_back(decompose_u2(u));
  const Mass m(static_cast<double>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(u2_to_alpha(pool[i++ % kPool], m));
}
BENCHMARK(BM_U2ToAlpha)->Arg(0)->Arg(10);

void BM_AlphaToU2(benchmark::State& state) {
  const auto pool = alphas();
  const Mass m(static_cast<double>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_to_u2(pool[i++ % kPool], m));
}
BENCHMARK(BM_AlphaToU2)->Arg(0)->Arg(10);

void BM_ScatterAlpha(benchmark::State& state) {
  const auto pool = alphas();
  const Mass m(1.0);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(scatter_alpha(pool[i++ % kPool], 2.0, m));
}
BENCHMARK(BM_ScatterAlpha);

void BM_Sweep(benchmark::State& state) {
  const AlphaBC flip = make_spin_flip(0.0, 1.0);
  const EnergyGrid grid{1.01, 5.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(flip, grid, Mass(1.0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(1000);

void BM_GramQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(Sign::Plus, Mass(1.0), 1.0));
}
BENCHMARK(BM_GramQuadrature)->Unit(benchmark::kMillisecond);

void BM_GreenIdentityQuadrature(benchmark::State& state) {
  Sampler rng;
  const TrialFunction psi = random_trial_function(rng, Mass(1.0), 1.0);
  const TrialFunction phi = random_trial_function(rng, Mass(1.0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_form_quadrature(psi, phi));
}
BENCHMARK(BM_GreenIdentityQuadrature)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
