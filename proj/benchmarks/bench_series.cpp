#include <benchmark/benchmark.h>

#include "bracetree/series.hpp"

using namespace bracetree;

namespace {

void BM_GeneratorHilbert(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto fd = Series::monomial(order, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(generator_hilbert(fd, order));
}
BENCHMARK(BM_GeneratorHilbert)->RangeMultiplier(2)->Range(8, 64);

void BM_PrelieHilbert(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto fd = Series::monomial(order, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(prelie_hilbert(fd, order));
}
BENCHMARK(BM_PrelieHilbert)->RangeMultiplier(2)->Range(8, 64);

void BM_InvEuler(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto p = (Series::one(order) - Series::monomial(order, 1)).inverse();
  p = p * p;
  for (auto _ : state) benchmark::DoNotOptimize(inv_euler(p));
}
BENCHMARK(BM_InvEuler)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
