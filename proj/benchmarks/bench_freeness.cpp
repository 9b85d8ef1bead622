#include <benchmark/benchmark.h>

#include "bracetree/freeness.hpp"

using namespace bracetree;

namespace {

void BM_StarSpan(benchmark::State& state) {
  auto alphabet = DecorationAlphabet::uniform(static_cast<std::size_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(star_span(n, alphabet));
}
BENCHMARK(BM_StarSpan)->Args({1, 6})->Args({1, 7})->Args({2, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

void BM_VerifyFreeness(benchmark::State& state) {
  auto alphabet = DecorationAlphabet::uniform(static_cast<std::size_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_freeness(alphabet, n));
}
BENCHMARK(BM_VerifyFreeness)->Args({1, 7})->Args({2, 5})->Args({3, 4})->Unit(benchmark::kMillisecond);

}  // namespace
