#include "coordnet/components.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "coordnet/metrics.hpp"

namespace coordnet {

std::vector<std::uint32_t> component_ids_bfs(const GraphView& view) {
  std::vector<std::uint32_t> comp(view.node_count, UINT32_MAX);
  std::vector<NodeId> queue;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < view.node_count; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    comp[s] = next;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : view.neighbors_of(queue[head])) {
        if (comp[w] == UINT32_MAX) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> rank;

  explicit UnionFind(std::uint32_t n) : parent(n), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
  }
};

}  // namespace

std::vector<std::uint32_t> component_ids_union_find(const GraphView& view) {
  UnionFind uf(view.node_count);
  for (NodeId u = 0; u < view.node_count; ++u)
    for (NodeId v : view.neighbors_of(u))
      if (u < v) uf.unite(u, v);

  std::vector<std::uint32_t> comp(view.node_count);
  std::vector<std::uint32_t> renumber(view.node_count, UINT32_MAX);
  std::uint32_t next = 0;
  for (NodeId v = 0; v < view.node_count; ++v) {
    std::uint32_t root = uf.find(v);
    if (renumber[root] == UINT32_MAX) renumber[root] = next++;
    comp[v] = renumber[root];
  }
  return comp;
}

ComponentPartition connected_components(const ActorLinkGraph& graph) {
  GraphView view = graph.view();
  std::vector<std::uint32_t> raw = component_ids_bfs(view);

  std::uint32_t count = raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end()) + 1;
  std::vector<std::vector<NodeId>> groups(count);
  for (NodeId v = 0; v < view.node_count; ++v) groups[raw[v]].push_back(v);

  // Size descending; ties go to the component holding the smallest label.
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<const std::string*> min_label(count, nullptr);
  for (std::uint32_t c = 0; c < count; ++c) {
    for (NodeId v : groups[c]) {
      const std::string& l = graph.label(v);
      if (!min_label[c] || l < *min_label[c]) min_label[c] = &l;
    }
  }
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (groups[a].size() != groups[b].size()) return groups[a].size() > groups[b].size();
    return *min_label[a] < *min_label[b];
  });

  ComponentPartition partition;
  partition.components.resize(count);
  partition.component_of.resize(view.node_count);
  for (std::uint32_t rank = 0; rank < count; ++rank) {
    partition.components[rank] = std::move(groups[order[rank]]);
    for (NodeId v : partition.components[rank]) partition.component_of[v] = rank;
  }
  return partition;
}

namespace {

std::vector<NodeId> sample_distinct(std::uint32_t n, std::uint32_t want, std::uint64_t seed) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  if (want >= n) return ids;
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = 0; i < want; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(want);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

ComponentSummary summarize_component(const ActorLinkGraph& graph, const std::vector<NodeId>& component,
                                     std::uint32_t order_rank, const SummaryOptions& options) {
  ComponentSummary summary;
  summary.order_rank = order_rank;
  summary.node_count = static_cast<std::uint32_t>(component.size());

  Subgraph sub = induced_subgraph(graph, component);
  GraphView view = sub.csr.view();
  summary.edge_count = view.edge_count;

  const std::uint32_t n = view.node_count;
  if (n == 0) return summary;

  // Distances: all-pairs BFS up to the threshold, seeded source sampling
  // beyond it. The same BFS passes feed the closeness (arg)max.
  std::vector<double> dist_sum(n, 0.0);
  bool sampled = n > options.exact_distance_threshold;
  std::vector<NodeId> sources =
      sampled ? sample_distinct(n, options.sample_sources, options.seed)
              : sample_distinct(n, n, options.seed);
  summary.avg_distance_mode =
      DistanceEstimateInfo{sampled, static_cast<std::uint32_t>(sources.size()), options.seed};
  summary.closeness_estimated = sampled;

  double total = 0.0;
  std::uint64_t pair_count = 0;
  std::vector<std::int32_t> dist;
  for (NodeId s : sources) {
    bfs_distances(view, s, dist);
    for (NodeId v = 0; v < n; ++v) {
      if (v == s || dist[v] < 0) continue;
      total += dist[v];
      dist_sum[v] += dist[v];
      ++pair_count;
    }
  }
  summary.avg_distance = pair_count ? total / static_cast<double>(pair_count) : 0.0;

  // Degree centrality argmax == degree argmax; denominator per options.
  std::uint32_t denom_n = options.local_n ? n : graph.node_count();
  auto label_of = [&](NodeId local) -> const std::string& { return graph.label(sub.to_parent[local]); };
  NodeId deg_argmax = 0;
  for (NodeId v = 1; v < n; ++v) {
    if (view.degree(v) > view.degree(deg_argmax) ||
        (view.degree(v) == view.degree(deg_argmax) && label_of(v) < label_of(deg_argmax)))
      deg_argmax = v;
  }

  NodeId clo_argmax = 0;
  if (n >= 2) {
    for (NodeId v = 1; v < n; ++v) {
      if (dist_sum[v] < dist_sum[clo_argmax] ||
          (dist_sum[v] == dist_sum[clo_argmax] && label_of(v) < label_of(clo_argmax)))
        clo_argmax = v;
    }
  }

  summary.betweenness_sampled = n > options.betweenness_sample_threshold;
  BetweennessMode mode;
  if (summary.betweenness_sampled) {
    mode.kind = BetweennessKind::kSampled;
    mode.pivots = std::min(options.betweenness_pivots, n);
    mode.seed = options.seed;
  }
  std::vector<double> betweenness = brandes_node_betweenness(view, mode, options.threads);
  NodeId bet_argmax = 0;
  for (NodeId v = 1; v < n; ++v) {
    if (betweenness[v] > betweenness[bet_argmax] ||
        (betweenness[v] == betweenness[bet_argmax] && label_of(v) < label_of(bet_argmax)))
      bet_argmax = v;
  }

  summary.maxima_agree = (deg_argmax == clo_argmax) && (deg_argmax == bet_argmax);

  summary.max_central.label = label_of(deg_argmax);
  summary.max_central.degree_centrality =
      denom_n >= 2 ? static_cast<double>(view.degree(deg_argmax)) / (denom_n - 1.0) : 0.0;
  if (n >= 2 && dist_sum[deg_argmax] > 0.0) {
    double sum = dist_sum[deg_argmax];
    if (sampled && sources.size() > 0)
      sum *= static_cast<double>(n - 1) / static_cast<double>(sources.size());
    summary.max_central.closeness = 1.0 / sum;
  }
  summary.max_central.betweenness = betweenness[deg_argmax];
  return summary;
}

std::vector<ComponentSummary> top_components_report(const ActorLinkGraph& graph, std::size_t k,
                                                    const SummaryOptions& options) {
  ComponentPartition partition = connected_components(graph);
  std::size_t take = std::min(k, partition.components.size());
  std::vector<ComponentSummary> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i)
    out.push_back(summarize_component(graph, partition.components[i],
                                      static_cast<std::uint32_t>(i + 1), options));
  return out;
}

}  // namespace coordnet
