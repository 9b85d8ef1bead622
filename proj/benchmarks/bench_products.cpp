#include <benchmark/benchmark.h>

#include "bracetree/axioms.hpp"
#include "bracetree/products.hpp"
#include "bracetree/sampling.hpp"

using namespace bracetree;

namespace {

// Brace of k random arguments of weight 2 into a random target of the given weight.
void BM_Brace(benchmark::State& state) {
  auto alphabet = DecorationAlphabet::uniform(2);
  TreeSampler sampler(alphabet, 1);
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto target_weight = static_cast<std::size_t>(state.range(1));
  std::vector<PlanarTree> args;
  for (std::size_t i = 0; i < k; ++i) args.push_back(sampler.planar(2));
  auto target = sampler.planar(target_weight);
  std::size_t terms = 0;
  for (auto _ : state) {
    auto x = brace(args, target);
    terms = x.size();
    benchmark::DoNotOptimize(x);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_Brace)->ArgsProduct({{1, 2, 3}, {3, 6, 9}});

void BM_PrelieRooted(benchmark::State& state) {
  auto alphabet = DecorationAlphabet::uniform(2);
  TreeSampler sampler(alphabet, 2);
  auto t1 = sampler.rooted(3);
  auto t2 = sampler.rooted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prelie_rooted(t1, t2));
}
BENCHMARK(BM_PrelieRooted)->Arg(4)->Arg(8)->Arg(12);

void BM_Shuffle(benchmark::State& state) {
  auto alphabet = DecorationAlphabet::uniform(2);
  TreeSampler sampler(alphabet, 3);
  const auto n = static_cast<std::size_t>(state.range(0));
  Forest f1, f2;
  for (std::size_t i = 0; i < n; ++i) {
    f1.push_back(sampler.planar(1));
    f2.push_back(sampler.planar(2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(shuffle(f1, f2));
}
BENCHMARK(BM_Shuffle)->DenseRange(2, 6, 2);

void BM_BraceAxiomInstance(benchmark::State& state) {
  auto alphabet = DecorationAlphabet::uniform(2);
  TreeSampler sampler(alphabet, 4);
  std::vector<PlanarTree> outer{sampler.planar(2), sampler.planar(2)}, inner{sampler.planar(2), sampler.planar(2)};
  auto target = sampler.planar(3);
  std::vector<PlanarComb> args(outer.begin(), outer.end());
  for (auto _ : state) {
    bool ok = brace(std::span<const PlanarComb>(args), brace(inner, target)) == brace_composition(outer, inner, target);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_BraceAxiomInstance)->Unit(benchmark::kMillisecond);

}  // namespace
