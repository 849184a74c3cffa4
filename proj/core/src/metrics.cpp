#include "coordnet/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

#include "coordnet/error.hpp"

namespace coordnet {

namespace {

int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Scratch arrays for one Brandes / BFS pass, reused across sources.
struct PassScratch {
  std::vector<std::int32_t> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;  // BFS visit order, doubles as the queue
};

// Runs compute(source, scratch, partial) for every source and folds the
// partial vectors into `acc` in source-list order. The fold order is what
// makes the result independent of the worker count.
void ordered_source_accumulate(
    const std::vector<NodeId>& sources, std::size_t partial_len, std::uint32_t node_count,
    int threads, const std::function<void(NodeId, PassScratch&, std::vector<double>&)>& compute,
    std::vector<double>& acc) {
  acc.assign(partial_len, 0.0);
  if (sources.empty()) return;

  threads = std::min<std::size_t>(effective_threads(threads), sources.size());
  if (threads <= 1) {
    PassScratch scratch;
    std::vector<double> partial;
    for (NodeId s : sources) {
      partial.assign(partial_len, 0.0);
      compute(s, scratch, partial);
      for (std::size_t i = 0; i < partial_len; ++i) acc[i] += partial[i];
    }
    return;
  }

  const std::size_t in_flight_cap = static_cast<std::size_t>(threads) * 4;
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;    // next source index to claim
  std::size_t merged = 0;  // sources folded into acc so far
  std::unordered_map<std::size_t, std::vector<double>> done;

  auto worker = [&] {
    PassScratch scratch;
    for (;;) {
      std::size_t idx;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return next >= sources.size() || next - merged < in_flight_cap; });
        if (next >= sources.size()) return;
        idx = next++;
      }
      std::vector<double> partial(partial_len, 0.0);
      compute(sources[idx], scratch, partial);
      {
        std::lock_guard lock(mu);
        done.emplace(idx, std::move(partial));
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  for (std::size_t idx = 0; idx < sources.size(); ++idx) {
    std::vector<double> partial;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done.count(idx) > 0; });
      partial = std::move(done[idx]);
      done.erase(idx);
      ++merged;
    }
    cv.notify_all();
    for (std::size_t i = 0; i < partial_len; ++i) acc[i] += partial[i];
  }
  for (auto& t : pool) t.join();
  (void)node_count;
}

void reset_scratch(PassScratch& s, std::uint32_t n) {
  s.dist.assign(n, -1);
  s.sigma.assign(n, 0);
  s.delta.assign(n, 0.0);
  s.order.clear();
}

// Forward BFS of one Brandes pass: fills dist, sigma and the visit order.
void brandes_forward(const GraphView& view, NodeId source, PassScratch& s) {
  reset_scratch(s, view.node_count);
  s.dist[source] = 0;
  s.sigma[source] = 1;
  s.order.push_back(source);
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    NodeId v = s.order[head];
    for (NodeId w : view.neighbors_of(v)) {
      if (s.dist[w] < 0) {
        s.dist[w] = s.dist[v] + 1;
        s.order.push_back(w);
      }
      if (s.dist[w] == s.dist[v] + 1) s.sigma[w] += s.sigma[v];
    }
  }
}

std::vector<NodeId> pick_sources(const GraphView& view, const BetweennessMode& mode) {
  std::vector<NodeId> sources;
  if (mode.kind == BetweennessKind::kExact) {
    sources.resize(view.node_count);
    for (NodeId v = 0; v < view.node_count; ++v) sources[v] = v;
    return sources;
  }
  if (mode.pivots > view.node_count) throw PivotsExceedNodes(mode.pivots, view.node_count);
  // Partial Fisher-Yates over the id range, then ascending order so the
  // visit order is fixed; pivots == n therefore degenerates to exact.
  std::vector<NodeId> ids(view.node_count);
  for (NodeId v = 0; v < view.node_count; ++v) ids[v] = v;
  std::mt19937_64 rng(mode.seed);
  for (std::uint32_t i = 0; i < mode.pivots; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(i, view.node_count - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(mode.pivots);
  std::sort(ids.begin(), ids.end());
  return ids;
}

double sample_scale(const GraphView& view, const BetweennessMode& mode) {
  if (mode.kind == BetweennessKind::kExact || mode.pivots == 0) return 1.0;
  return static_cast<double>(view.node_count) / static_cast<double>(mode.pivots);
}

}  // namespace

void bfs_distances(const GraphView& view, NodeId source, std::vector<std::int32_t>& dist) {
  dist.assign(view.node_count, -1);
  std::vector<NodeId> queue;
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    for (NodeId w : view.neighbors_of(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

std::vector<double> brandes_node_betweenness(const GraphView& view, const BetweennessMode& mode,
                                             int threads) {
  std::vector<NodeId> sources = pick_sources(view, mode);
  std::vector<double> acc;
  ordered_source_accumulate(
      sources, view.node_count, view.node_count, threads,
      [&view](NodeId source, PassScratch& s, std::vector<double>& partial) {
        brandes_forward(view, source, s);
        for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
          NodeId w = *it;
          for (NodeId v : view.neighbors_of(w)) {
            if (s.dist[v] + 1 == s.dist[w]) {
              s.delta[v] += static_cast<double>(s.sigma[v]) / static_cast<double>(s.sigma[w]) *
                            (1.0 + s.delta[w]);
            }
          }
          if (w != source) partial[w] += s.delta[w];
        }
      },
      acc);
  const double scale = sample_scale(view, mode) * 0.5;  // halve: unordered pairs
  for (double& v : acc) v *= scale;
  return acc;
}

std::vector<double> brandes_edge_betweenness(const GraphView& view, const BetweennessMode& mode,
                                             int threads) {
  if (view.edge_count == 0) throw EmptyGraph("edge betweenness of an edgeless graph");
  std::vector<NodeId> sources = pick_sources(view, mode);
  std::vector<double> acc;
  ordered_source_accumulate(
      sources, view.edge_count, view.node_count, threads,
      [&view](NodeId source, PassScratch& s, std::vector<double>& partial) {
        brandes_forward(view, source, s);
        for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
          NodeId w = *it;
          auto nbrs = view.neighbors_of(w);
          auto arcs = view.arc_edge.subspan(view.offsets[w], nbrs.size());
          for (std::size_t i = 0; i < nbrs.size(); ++i) {
            NodeId v = nbrs[i];
            if (s.dist[v] + 1 == s.dist[w]) {
              double c = static_cast<double>(s.sigma[v]) / static_cast<double>(s.sigma[w]) *
                         (1.0 + s.delta[w]);
              s.delta[v] += c;
              partial[arcs[i]] += c;
            }
          }
        }
      },
      acc);
  const double scale = sample_scale(view, mode) * 0.5;
  for (double& v : acc) v *= scale;
  return acc;
}

ClosenessData closeness_sums(const GraphView& view, int threads) {
  ClosenessData data;
  data.component_size.assign(view.node_count, 0);

  // Component sizes via one linear sweep.
  {
    std::vector<std::int32_t> comp(view.node_count, -1);
    std::vector<NodeId> queue;
    std::vector<std::uint32_t> sizes;
    for (NodeId s = 0; s < view.node_count; ++s) {
      if (comp[s] >= 0) continue;
      std::int32_t c = static_cast<std::int32_t>(sizes.size());
      sizes.push_back(0);
      queue.clear();
      queue.push_back(s);
      comp[s] = c;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId v = queue[head];
        ++sizes.back();
        for (NodeId w : view.neighbors_of(v)) {
          if (comp[w] < 0) {
            comp[w] = c;
            queue.push_back(w);
          }
        }
      }
    }
    for (NodeId v = 0; v < view.node_count; ++v)
      data.component_size[v] = sizes[static_cast<std::size_t>(comp[v])];
  }

  std::vector<NodeId> sources(view.node_count);
  for (NodeId v = 0; v < view.node_count; ++v) sources[v] = v;
  ordered_source_accumulate(
      sources, view.node_count, view.node_count, threads,
      [&view](NodeId source, PassScratch& s, std::vector<double>& partial) {
        // d(source, v) contributes to v's sum; symmetry makes the transposed
        // accumulation equal to the per-node sum.
        reset_scratch(s, view.node_count);
        s.dist[source] = 0;
        s.order.push_back(source);
        for (std::size_t head = 0; head < s.order.size(); ++head) {
          NodeId v = s.order[head];
          for (NodeId w : view.neighbors_of(v)) {
            if (s.dist[w] < 0) {
              s.dist[w] = s.dist[v] + 1;
              s.order.push_back(w);
            }
          }
        }
        for (NodeId v : s.order)
          if (v != source) partial[v] += s.dist[v];
      },
      data.distance_sum);
  return data;
}

namespace {

void fill_identity(CentralityTable& table, const ActorLinkGraph& graph) {
  table.graph_node_count = graph.node_count();
  table.rows.resize(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    table.rows[v].node = v;
    table.rows[v].label = graph.label(v);
    table.rows[v].kind = graph.kind(v);
    table.rows[v].degree = graph.view().degree(v);
  }
}

}  // namespace

CentralityTable compute_centralities(const ActorLinkGraph& graph, const CentralityOptions& options) {
  CentralityTable table;
  fill_identity(table, graph);
  GraphView view = graph.view();

  if (options.measures.degree) {
    if (graph.node_count() == 0) throw EmptyGraph("degree centrality of an empty graph");
    std::uint32_t n = options.denominator_n.value_or(graph.node_count());
    if (n < 2) throw SingleNode();
    const double denom = static_cast<double>(n) - 1.0;
    for (auto& row : table.rows) row.degree_centrality = static_cast<double>(row.degree) / denom;
    table.has_degree = true;
  }

  if (options.measures.closeness) {
    ClosenessData data = closeness_sums(view, options.threads);
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      if (data.component_size[v] >= 2) {
        double raw = 1.0 / data.distance_sum[v];
        table.rows[v].closeness_raw = raw;
        table.rows[v].closeness_normalized = (data.component_size[v] - 1) * raw;
      }
    }
    table.has_closeness = true;
  }

  if (options.measures.betweenness) {
    std::vector<double> raw = brandes_node_betweenness(view, options.betweenness_mode, options.threads);
    const double n = static_cast<double>(graph.node_count());
    const double denom = (n - 1.0) * (n - 2.0) / 2.0;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      table.rows[v].betweenness_raw = raw[v];
      table.rows[v].betweenness_normalized = denom > 0 ? raw[v] / denom : 0.0;
    }
    table.has_betweenness = true;
    table.betweenness_mode = options.betweenness_mode;
  }
  return table;
}

CentralityTable degree_centrality(const ActorLinkGraph& graph) {
  CentralityOptions options;
  options.measures.degree = true;
  return compute_centralities(graph, options);
}

CentralityTable closeness_centrality(const ActorLinkGraph& graph, int threads) {
  CentralityOptions options;
  options.measures.closeness = true;
  options.threads = threads;
  return compute_centralities(graph, options);
}

CentralityTable betweenness_nodes(const ActorLinkGraph& graph, const BetweennessMode& mode,
                                  int threads) {
  CentralityOptions options;
  options.measures.betweenness = true;
  options.betweenness_mode = mode;
  options.threads = threads;
  return compute_centralities(graph, options);
}

std::vector<double> betweenness_edges(const ActorLinkGraph& graph, int threads) {
  return brandes_edge_betweenness(graph.view(), BetweennessMode{}, threads);
}

std::vector<CentralityRow> top_k(const CentralityTable& table, CentralityColumn column,
                                 std::size_t k) {
  auto value_of = [&](const CentralityRow& row) -> std::optional<double> {
    switch (column) {
      case CentralityColumn::kDegree:
        return table.has_degree ? std::optional<double>(row.degree) : std::nullopt;
      case CentralityColumn::kDegreeCentrality:
        return table.has_degree ? std::optional<double>(row.degree_centrality) : std::nullopt;
      case CentralityColumn::kCloseness:
        if (!table.has_closeness) return std::nullopt;
        return row.closeness_raw;
      case CentralityColumn::kBetweenness:
        if (!table.has_betweenness) return std::nullopt;
        return row.betweenness_raw;
    }
    return std::nullopt;
  };

  bool column_available = (column == CentralityColumn::kDegree && table.has_degree) ||
                          (column == CentralityColumn::kDegreeCentrality && table.has_degree) ||
                          (column == CentralityColumn::kCloseness && table.has_closeness) ||
                          (column == CentralityColumn::kBetweenness && table.has_betweenness);
  if (!column_available) throw ColumnNotComputed(to_string(column));

  std::vector<const CentralityRow*> rows;
  rows.reserve(table.rows.size());
  for (const auto& row : table.rows)
    if (value_of(row)) rows.push_back(&row);
  std::sort(rows.begin(), rows.end(), [&](const CentralityRow* a, const CentralityRow* b) {
    double va = *value_of(*a), vb = *value_of(*b);
    if (va != vb) return va > vb;
    return a->label < b->label;
  });
  if (rows.size() > k) rows.resize(k);

  std::vector<CentralityRow> out;
  out.reserve(rows.size());
  for (const CentralityRow* row : rows) out.push_back(*row);
  return out;
}

void scatter_export(const CentralityTable& table, std::ostream& out) {
  if (!table.has_degree) throw ColumnNotComputed("degree_centrality");
  char buf[32];
  for (const auto& row : table.rows) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), row.degree_centrality);
    out << row.degree << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
  }
}

const char* to_string(CentralityColumn column) {
  switch (column) {
    case CentralityColumn::kDegree:
      return "degree";
    case CentralityColumn::kDegreeCentrality:
      return "degree_centrality";
    case CentralityColumn::kCloseness:
      return "closeness";
    case CentralityColumn::kBetweenness:
      return "betweenness";
  }
  return "?";
}

}  // namespace coordnet
