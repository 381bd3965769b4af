#include <benchmark/benchmark.h>

#include "hasym/asymptotics.hpp"
#include "hasym/numerics.hpp"
#include "hasym/recursions.hpp"

using namespace hasym;

namespace {

// a fresh cache per iteration so nothing is memoized across runs
void BM_GenP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FamilyCache cache;
    benchmark::DoNotOptimize(cache.p(n));
  }
}
BENCHMARK(BM_GenP)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GenQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FamilyCache cache;
    benchmark::DoNotOptimize(cache.q(n));
  }
}
BENCHMARK(BM_GenQ)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_IntegrateH(benchmark::State& state) {
  SolverConfig cfg;
  cfg.rel_tol = Real(1e-20);
  cfg.abs_tol = Real(1e-22);
  const Real t_max = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_h(InitialData{0, 1, 1}, t_max, cfg));
}
BENCHMARK(BM_IntegrateH)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SolveG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_g(InitialData{0, 1, 1}, SolverConfig::high_accuracy()));
}
BENCHMARK(BM_SolveG)->Unit(benchmark::kMillisecond);

void BM_InvertG(benchmark::State& state) {
  const auto p = solve_g(InitialData{0, 1, 1}, SolverConfig::high_accuracy());
  const Real x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invert_G(x, p));
}
BENCHMARK(BM_InvertG)->Arg(100)->Arg(1000000);

void BM_Lambert(benchmark::State& state) {
  const Real x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambert_wm1_numeric(x));
}
BENCHMARK(BM_Lambert)->Arg(10)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
