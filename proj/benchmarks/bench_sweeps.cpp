#include "tempered/discretize.hpp"
#include "tempered/mold_builders.hpp"
#include "tempered/theorems.hpp"

#include <benchmark/benchmark.h>

using namespace tempered;

namespace {

void BM_SweepGolden(benchmark::State& state) {
  const auto F = golden_fractal_mold();
  const auto m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_sweep(F, m).intervals.size());
  }
}
BENCHMARK(BM_SweepGolden)->Arg(12)->Arg(34)->Unit(benchmark::kMillisecond);

void BM_SweepLog(benchmark::State& state) {
  const auto L = metric_mold();
  const auto m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_sweep(L, m).intervals.size());
  }
}
BENCHMARK(BM_SweepLog)->Arg(12)->Arg(34)->Unit(benchmark::kMillisecond);

void BM_MultiplicityCensus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplicity_census(34, 1, 200).feasible.size());
  }
}
BENCHMARK(BM_MultiplicityCensus)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace
