#include <vector>

#include <benchmark/benchmark.h>

#include "upconv/budget.hpp"
#include "upconv/config.hpp"
#include "upconv/conversion.hpp"
#include "upconv/counting.hpp"
#include "upconv/qpm.hpp"
#include "upconv/sellmeier.hpp"
#include "upconv/sweep.hpp"

namespace {

using namespace upconv;

void BM_refractive_index(benchmark::State& state) {
  const auto model = SellmeierModel::congruent_linbo3_e();
  double lambda = 1.55;
  for (auto _ : state) {
    benchmark::DoNotOptimize(refractive_index(model, lambda, 60.0));
    lambda = lambda == 1.55 ? 1.95 : 1.55;
  }
}
BENCHMARK(BM_refractive_index);

void BM_tuning_curve_201(benchmark::State& state) {
  const auto model = SellmeierModel::congruent_linbo3_e();
  const QpmGrating grating(0.052, 19.6, 60.0);
  std::vector<double> grid;
  grid.reserve(201);
  for (int i = 0; i < 201; ++i) {
    grid.push_back(1.6034 + 0.004 * i / 200.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(tuning_curve(grating, 1.55, grid, model));
  }
}
BENCHMARK(BM_tuning_curve_201);

void BM_pm_bandwidth_fwhm(benchmark::State& state) {
  const auto model = SellmeierModel::congruent_linbo3_e();
  const QpmGrating grating(0.052, 19.6, 60.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pm_bandwidth_fwhm(grating, 1.55, model));
  }
}
BENCHMARK(BM_pm_bandwidth_fwhm);

void BM_fit_sine_squared(benchmark::State& state) {
  const ConversionModel truth(0.1025, 0.3, 0.052);
  std::vector<PowerCountSample> samples;
  for (int i = 1; i <= 10; ++i) {
    const double p = 0.06 * i;
    samples.emplace_back(p, internal_efficiency(truth, p),
                         SampleKind::kEfficiency);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_sine_squared(samples));
  }
}
BENCHMARK(BM_fit_sine_squared);

void BM_simulate_counts_1e5_gates(benchmark::State& state) {
  const GatedSource source(1e6, 1e-9, 1e6);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_counts(source, 0.1025, 24500.0, 0.1, seed++));
  }
}
BENCHMARK(BM_simulate_counts_1e5_gates);

void BM_optimize_pump(benchmark::State& state) {
  const auto system = SystemConfig{}.detection_system();
  const SweepSpec spec(0.0, 0.6, 61, SweepObjective::kMaxDe);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_pump(system, spec));
  }
}
BENCHMARK(BM_optimize_pump);

}  // namespace

BENCHMARK_MAIN();
