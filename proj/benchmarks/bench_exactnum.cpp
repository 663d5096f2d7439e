#include "tempered/exact_value.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace tempered;

namespace {

std::vector<GoldenNumber> random_goldens(std::size_t count) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-1000000000L, 1000000000L);
  std::vector<GoldenNumber> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(BigInt(coeff(rng)), BigInt(coeff(rng)));
  }
  return out;
}

void BM_GoldenFloor(benchmark::State& state) {
  const auto xs = random_goldens(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i++ % xs.size()].floor());
  }
}
BENCHMARK(BM_GoldenFloor);

void BM_GoldenCompareFrac(benchmark::State& state) {
  const auto xs = random_goldens(257);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % (xs.size() - 1);
    benchmark::DoNotOptimize(compare_frac(xs[k], xs[k + 1]));
  }
}
BENCHMARK(BM_GoldenCompareFrac);

void BM_LogFloor(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  unsigned long n = 2;
  for (auto _ : state) {
    LogValue v(m, BigInt(n));
    benchmark::DoNotOptimize(v.floor());
    n = n % 500 + 2;
  }
}
BENCHMARK(BM_LogFloor)->Arg(12)->Arg(34)->Arg(200);

void BM_LogCompareFracToRational(benchmark::State& state) {
  const LogValue v(34, BigInt(97));
  const ExactRational alpha(BigInt(12345), BigInt(100000));
  for (auto _ : state) {
    benchmark::DoNotOptimize(v.compare_frac(alpha));
  }
}
BENCHMARK(BM_LogCompareFracToRational);

}  // namespace
