#include <benchmark/benchmark.h>

#include <numbers>

#include "wellpol/dalgarno_lewis.hpp"
#include "wellpol/grid_oracle.hpp"
#include "wellpol/limits.hpp"
#include "wellpol/well_spectrum.hpp"

namespace {

using namespace wellpol;

void BM_GroundStateFromR(benchmark::State& state) {
  const double R = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_from_R(R));
}
BENCHMARK(BM_GroundStateFromR)->Arg(721)->Arg(3617)->Arg(49008);

void BM_Breakdown(benchmark::State& state) {
  const GroundState s = ground_state_from_gamma(0.39 * std::numbers::pi);
  for (auto _ : state) benchmark::DoNotOptimize(breakdown(s));
}
BENCHMARK(BM_Breakdown);

void BM_Quadrature(benchmark::State& state) {
  const GroundState s = ground_state_from_gamma(static_cast<double>(state.range(0)) / 100.0 * std::numbers::pi);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_via_quadrature(s));
}
BENCHMARK(BM_Quadrature)->Arg(15)->Arg(39)->Arg(49);

void BM_InfiniteWellLimit(benchmark::State& state) {
  const auto eps = default_infinite_well_epsilons();
  for (auto _ : state) benchmark::DoNotOptimize(infinite_well_limit(eps));
}
BENCHMARK(BM_InfiniteWellLimit);

void BM_OracleSum(benchmark::State& state) {
  GridOracleConfig c = GridOracleConfig::finite_well(49.008061);
  c.num_points = static_cast<int>(state.range(0)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_sum_over_states(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleSum)->Arg(1200)->Arg(2400)->Arg(4800)->Unit(benchmark::kMillisecond);

void BM_OracleCurvature(benchmark::State& state) {
  const GridOracleConfig c = GridOracleConfig::finite_well(49.008061);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_from_curvature(c));
}
BENCHMARK(BM_OracleCurvature)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
