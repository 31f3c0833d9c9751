#include <benchmark/benchmark.h>

#include <numbers>

#include "slr/restore.hpp"
#include "slr/stieltjes.hpp"
#include "slr/weyl.hpp"

namespace {

slr::SpectralMeasure inverse_sqrt() {
  const double c = 1.0 / std::numbers::pi;
  return {{}, {slr::DensityPiece{0.0, 1.0, slr::PowerLaw{c, -0.5}}}, slr::PowerTail{1.0, c, 0.5}, true};
}

void BM_ResolventQuadrature(benchmark::State& state) {
  const slr::StieltjesLikeFunction f{inverse_sqrt(), 0.0};
  const std::complex<double> z(-0.3, std::pow(10.0, -static_cast<double>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(slr::eval_V(f, z));
}
BENCHMARK(BM_ResolventQuadrature)->DenseRange(0, 3);

void BM_Moments(benchmark::State& state) {
  const auto sigma = inverse_sqrt();
  for (auto _ : state) benchmark::DoNotOptimize(slr::moments(sigma));
}
BENCHMARK(BM_Moments);

void BM_WeylM(benchmark::State& state) {
  const slr::WeylEvaluator ev({0.0, slr::ConstantPotential{1.0}});
  const std::complex<double> lambda(2.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ev.weyl_m(lambda));
}
BENCHMARK(BM_WeylM)->Unit(benchmark::kMillisecond);

void BM_WeylMinusZero(benchmark::State& state) {
  const slr::WeylEvaluator ev({0.0, slr::ZeroPotential{}});
  for (auto _ : state) benchmark::DoNotOptimize(ev.weyl_m_at_minus_zero());
}
BENCHMARK(BM_WeylMinusZero)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slr::sweep(2.0, 1.0, 0.5, std::nullopt, -3.0, 1.0, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Range(16, 4096);

}  // namespace

BENCHMARK_MAIN();
