#include <benchmark/benchmark.h>

#include "navembed/embedding.hpp"
#include "navembed/generators.hpp"
#include "navembed/graph.hpp"
#include "navembed/routing.hpp"
#include "navembed/spectral.hpp"

namespace {

using namespace navembed;

void BM_WattsStrogatz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(watts_strogatz({.n = n, .k = 10, .p = 0.01, .seed = seed++}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_WattsStrogatz)->Arg(1000)->Arg(10000);

void BM_GeneralizedBa(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_ba({.n = n, .m_links = 3, .k0 = 0.0, .seed = seed++}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_GeneralizedBa)->Arg(1000)->Arg(10000);

void BM_Diameter(benchmark::State& state) {
  const Graph g = watts_strogatz({.n = static_cast<std::size_t>(state.range(0)), .k = 10, .p = 0.01});
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_Diameter)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Clustering(benchmark::State& state) {
  const Graph g = watts_strogatz({.n = 1000, .k = 10, .p = 0.01});
  for (auto _ : state) benchmark::DoNotOptimize(clustering_coefficient(g));
}
BENCHMARK(BM_Clustering);

// One averaging step; the argument is the dimension m.
void BM_EmbeddingStep(benchmark::State& state) {
  const Graph g = watts_strogatz({.n = 1000, .k = 10, .p = 0.01});
  EmbeddingState s = init_state(g, {.dim = static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) step(g, s);
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_EmbeddingStep)->Arg(5)->Arg(20);

void BM_EmbedToSynchronization(benchmark::State& state) {
  const Graph g = watts_strogatz({.n = 1000, .k = 10, .p = 0.01});
  for (auto _ : state) benchmark::DoNotOptimize(embed(g, {.dim = 20}));
}
BENCHMARK(BM_EmbedToSynchronization)->Unit(benchmark::kMillisecond);

void BM_GreedyRouting(benchmark::State& state) {
  const Graph g = watts_strogatz({.n = 1000, .k = 10, .p = 0.01});
  const EmbeddingResult e = embed(g, {.dim = 20});
  const RngStream stream(3);
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(g, e.positions, 1000, stream));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_GreedyRouting)->Unit(benchmark::kMillisecond);

void BM_SpectralDecomposition(benchmark::State& state) {
  const Graph g = watts_strogatz({.n = static_cast<std::size_t>(state.range(0)), .k = 6, .p = 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_SpectralDecomposition)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
