#include <benchmark/benchmark.h>

#include "hcfield/fit.hpp"
#include "hcfield/mc.hpp"
#include "hcfield/moments.hpp"
#include "hcfield/outage.hpp"
#include "hcfield/process.hpp"
#include "hcfield/rng.hpp"

using namespace hcfield;

static void BM_Pcf(benchmark::State& state) {
  TrafficModel tm(0.1, 4.0);
  double d = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pcf(tm, d));
}
BENCHMARK(BM_Pcf)->Arg(6)->Arg(40)->Arg(160);

static void BM_SampleConfiguration(benchmark::State& state) {
  TrafficModel tm(0.1, 4.0);
  Rng rng(1);
  for (auto _ : state) {
    PointConfiguration cfg = sample_configuration(tm, -1e4, 1e4, rng, 100.0);
    benchmark::DoNotOptimize(cfg.positions.data());
  }
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_SampleConfiguration);

static void BM_InterferenceTrials(benchmark::State& state) {
  TrafficModel tm(0.1, 4.0);
  LinkConfig link(100.0, 3.0);
  uint64_t trials = state.range(0);
  uint64_t seed = 0;
  for (auto _ : state) {
    SampleEnsemble ens = simulate_interference(tm, link, trials, ++seed, 1, 1);
    benchmark::DoNotOptimize(ens.values.data());
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_InterferenceTrials)->Arg(100)->Arg(1000);

static void BM_OutageCurvePpp(benchmark::State& state) {
  TrafficModel tm(0.05, 10.0);
  LinkConfig link(50.0, 4.0, 8e-7);
  for (auto _ : state) {
    double acc = 0.0;
    for (double db = -10.0; db <= 20.0; db += 1.0)
      acc += outage_ppp(tm, link, db_to_linear(db));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_OutageCurvePpp);

static void BM_OutageCurveShiftedGamma(benchmark::State& state) {
  TrafficModel tm(0.05, 10.0);
  LinkConfig link(50.0, 4.0, 8e-7);
  ShiftedGammaFit fit = fit_shifted_gamma(analytic_moments(tm, link));
  for (auto _ : state) {
    double acc = 0.0;
    for (double db = -10.0; db <= 20.0; db += 1.0)
      acc += outage_shifted_gamma(fit, db_to_linear(db), link.pr());
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_OutageCurveShiftedGamma);

static void BM_VarianceQuadrature(benchmark::State& state) {
  TrafficModel tm(0.1, 4.0);
  LinkConfig link(100.0, 3.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(variance_quadrature(tm, link));
}
BENCHMARK(BM_VarianceQuadrature);

BENCHMARK_MAIN();
