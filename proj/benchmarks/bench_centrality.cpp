#include <benchmark/benchmark.h>

#include "coordnet/metrics.hpp"
#include "support/generators.hpp"

using namespace coordnet;

static void BM_BrandesExact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  ActorLinkGraph g = testsupport::random_connected_graph(n, n, 3);
  for (auto _ : state) {
    auto bc = brandes_node_betweenness(g.view(), BetweennessMode{}, 1);
    benchmark::DoNotOptimize(bc.data());
  }
}
BENCHMARK(BM_BrandesExact)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_BrandesExactParallel(benchmark::State& state) {
  ActorLinkGraph g = testsupport::random_connected_graph(1000, 1000, 3);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto bc = brandes_node_betweenness(g.view(), BetweennessMode{}, threads);
    benchmark::DoNotOptimize(bc.data());
  }
}
BENCHMARK(BM_BrandesExactParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BrandesSampled(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  ActorLinkGraph g = testsupport::random_connected_graph(n, n, 3);
  BetweennessMode mode{BetweennessKind::kSampled, 256, 11};
  for (auto _ : state) {
    auto bc = brandes_node_betweenness(g.view(), mode, 2);
    benchmark::DoNotOptimize(bc.data());
  }
}
BENCHMARK(BM_BrandesSampled)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

static void BM_EdgeBetweenness(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  ActorLinkGraph g = testsupport::random_connected_graph(n, n / 2, 5);
  for (auto _ : state) {
    auto eb = brandes_edge_betweenness(g.view(), BetweennessMode{}, 2);
    benchmark::DoNotOptimize(eb.data());
  }
}
BENCHMARK(BM_EdgeBetweenness)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_Closeness(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  ActorLinkGraph g = testsupport::random_connected_graph(n, n, 9);
  for (auto _ : state) {
    auto c = closeness_sums(g.view(), 2);
    benchmark::DoNotOptimize(c.distance_sum.data());
  }
}
BENCHMARK(BM_Closeness)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
