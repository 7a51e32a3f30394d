#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <vector>

#include "casimir/ensemble.hpp"
#include "casimir/geometry.hpp"
#include "casimir/oscillator.hpp"
#include "casimir/pair.hpp"
#include "casimir/simulate.hpp"
#include "casimir/specfun.hpp"

namespace {

using namespace casimir;

void BM_ExpintG(benchmark::State& state) {
  const std::complex<double> z(0.9, 0.05);
  double tau = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expint_g(z * tau));
    tau = tau < 100.0 ? tau * 1.01 : 0.1;
  }
}
BENCHMARK(BM_ExpintG);

void BM_AutocorrQuadrature(benchmark::State& state) {
  const OscillatorSpec spec(1.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(autocorr_quadrature(spec, 10.0));
}
BENCHMARK(BM_AutocorrQuadrature)->Unit(benchmark::kMicrosecond);

void BM_CrossExpectation(benchmark::State& state) {
  const PairSpec p({1.0, 1e-3}, {2.0, 1e-3}, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(cross_expectation(p));
}
BENCHMARK(BM_CrossExpectation);

void BM_AveragedCrossTabulated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> w(n);
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    p[i] = 3.0 * w[i] * w[i];
  }
  const auto dist = SpectralDistribution::tabulated(w, p);
  for (auto _ : state) benchmark::DoNotOptimize(averaged_cross_expectation(dist, 1.0));
}
BENCHMARK(BM_AveragedCrossTabulated)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FiniteGammaNoise(benchmark::State& state) {
  const auto debye = SpectralDistribution::debye(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(averaged_pair_noise_dc_finite_gamma(debye, 1e-3));
}
BENCHMARK(BM_FiniteGammaNoise)->Unit(benchmark::kMillisecond);

void BM_GeometryMc(benchmark::State& state) {
  const TipSampleGeometry g(1.0, 0.1);
  const MaterialSpec m(1.0, 1.0, DipoleCoupling{1.0}, SpectralDistribution::debye(1.0));
  QuadratureSettings s;
  s.mc_samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(total_mc(g, m, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeometryMc)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

SimulationConfig bench_config(double ring_downs) {
  SimulationConfig c;
  c.params = CantileverParams::from_spring(1e-3, 2.0 * std::numbers::pi, 100.0, 4.0);
  c.dt = 1.0 / 25.0;
  c.duration = ring_downs * c.ring_down_time();
  return c;
}

void BM_SimulateBrownian(benchmark::State& state) {
  const auto c = bench_config(1000.0);
  std::size_t samples = 0;
  for (auto _ : state) {
    const auto ts = simulate_brownian(c);
    samples = ts.samples.size();
    benchmark::DoNotOptimize(ts.samples.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_SimulateBrownian)->Unit(benchmark::kMillisecond);

void BM_AutocorrelationAndFit(benchmark::State& state) {
  const auto c = bench_config(1000.0);
  const auto ts = simulate_brownian(c);
  for (auto _ : state) {
    const auto acf = estimate_autocorrelation(ts, 5.0 * c.ring_down_time());
    benchmark::DoNotOptimize(fit_autocorrelation(acf, c.params.mass));
  }
}
BENCHMARK(BM_AutocorrelationAndFit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
