#include <benchmark/benchmark.h>

#include "isopath/generators.hpp"
#include "isopath/isometric.hpp"
#include "isopath/solver.hpp"

using namespace isopath;

static void BM_AllPairs(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  Graph g = benes_graph(r);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_AllPairs)->DenseRange(2, 6);

static void BM_Enumerate(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  Graph g = grid_graph({s, s});
  const auto d = all_pairs_distances(g);
  std::size_t count = 0;
  for (auto _ : state) {
    IsometricPathEnumerator it(g, d);
    count = 0;
    while (it.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["paths"] = static_cast<double>(count);
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 7);

static void BM_CoverGrid(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  Graph g = grid_graph({s, s});
  for (auto _ : state) benchmark::DoNotOptimize(min_cover(g).value);
}
BENCHMARK(BM_CoverGrid)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_PartitionBenes(benchmark::State& state) {
  Graph g = benes_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_partition(g).value);
}
BENCHMARK(BM_PartitionBenes)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_PartitionTorus(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  Graph g = torus_graph({s, s});
  for (auto _ : state) benchmark::DoNotOptimize(min_partition(g).value);
}
BENCHMARK(BM_PartitionTorus)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
