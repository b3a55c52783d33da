// Serial reference loop versus the OpenMP path on the grids the sweeps use.

#include <benchmark/benchmark.h>

#include "spinpair/spinpair.hpp"

namespace {

spinpair::SweepConfig distance_config(spinpair::Execution exec) {
  spinpair::SweepConfig config;
  config.model.B = 0.4;
  config.model.lambda = 1.0;
  config.shell = spinpair::ShellPolicy::Nearest;
  config.execution = exec;
  return config;
}

void BM_SweepDistance(benchmark::State& state) {
  const auto exec = state.range(0) ? spinpair::Execution::Parallel : spinpair::Execution::Serial;
  const auto config = distance_config(exec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinpair::sweep_distance(config).rows.data());
  }
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}
BENCHMARK(BM_SweepDistance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Heatmap(benchmark::State& state) {
  auto config = distance_config(state.range(0) ? spinpair::Execution::Parallel
                                               : spinpair::Execution::Serial);
  config.deltas = {0.3};
  config.b_grid = spinpair::parse_grid("0:2:11");
  config.lambda_grid = spinpair::parse_grid("0:2:11");
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinpair::heatmap_b_lambda(config).rows.data());
  }
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}
BENCHMARK(BM_Heatmap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CorrelatorSet(benchmark::State& state) {
  spinpair::ModelParams params;
  params.B = 0.4;
  params.lambda = 1.0;
  params.M = static_cast<int>(state.range(0));
  const auto occ = spinpair::occupy_by_filling(params, 2.0);
  int R = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinpair::correlator_set(occ, R));
    R = (R + 1) % (params.M / 2);
  }
}
BENCHMARK(BM_CorrelatorSet)->Arg(500)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
