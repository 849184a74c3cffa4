#include <benchmark/benchmark.h>

#include "coordnet/components.hpp"
#include "coordnet/graph.hpp"
#include "support/generators.hpp"

using namespace coordnet;

static void BM_GraphBuild(benchmark::State& state) {
  const auto actors = static_cast<std::uint32_t>(state.range(0));
  const auto links = actors * 3;
  const auto edges = actors * 5;
  for (auto _ : state) {
    ActorLinkGraph g =
        testsupport::paper_scale_bipartite(actors, links, edges, actors / 10, 42);
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * edges);
}
BENCHMARK(BM_GraphBuild)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

static void BM_ConnectedComponents(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  ActorLinkGraph g = testsupport::random_connected_graph(n, n / 2, 7);
  for (auto _ : state) {
    auto ids = component_ids_bfs(g.view());
    benchmark::DoNotOptimize(ids.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ConnectedComponents)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_UnionFind(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  ActorLinkGraph g = testsupport::random_connected_graph(n, n / 2, 7);
  for (auto _ : state) {
    auto ids = component_ids_union_find(g.view());
    benchmark::DoNotOptimize(ids.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UnionFind)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
