#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coordnet/graph.hpp"

namespace coordnet {

enum class BetweennessKind { kExact, kSampled };

struct BetweennessMode {
  BetweennessKind kind = BetweennessKind::kExact;
  std::uint32_t pivots = 0;  // sampled only
  std::uint64_t seed = 0;    // sampled only
};

struct MeasureSet {
  bool degree = false;
  bool closeness = false;
  bool betweenness = false;
};

struct CentralityRow {
  NodeId node = 0;
  std::string label;
  NodeKind kind = NodeKind::kActor;
  std::uint32_t degree = 0;
  double degree_centrality = 0.0;
  std::optional<double> closeness_raw;         // 1 / sum of in-component distances
  std::optional<double> closeness_normalized;  // (|comp|-1) * raw
  std::optional<double> betweenness_raw;       // endpoint-excluded, unordered pairs
  std::optional<double> betweenness_normalized;
};

struct CentralityTable {
  std::uint32_t graph_node_count = 0;
  std::vector<CentralityRow> rows;  // indexed by node id
  bool has_degree = false;
  bool has_closeness = false;
  bool has_betweenness = false;
  BetweennessMode betweenness_mode;
};

enum class CentralityColumn { kDegree, kDegreeCentrality, kCloseness, kBetweenness };

// ---- view-level algorithms ------------------------------------------------
// All of these are deterministic for any worker count: per-source partial
// scores are folded in a fixed source order.

void bfs_distances(const GraphView& view, NodeId source, std::vector<std::int32_t>& dist);

// Brandes betweenness, raw values over unordered pairs with endpoints
// excluded. Sampled mode visits `pivots` distinct seeded sources and
// rescales by n/pivots; pivots == n reproduces exact output bit for bit.
std::vector<double> brandes_node_betweenness(const GraphView& view, const BetweennessMode& mode,
                                             int threads);
// Same accumulation per undirected edge id.
std::vector<double> brandes_edge_betweenness(const GraphView& view, const BetweennessMode& mode,
                                             int threads);

struct ClosenessData {
  std::vector<double> distance_sum;        // sum of distances within the component
  std::vector<std::uint32_t> component_size;
};
ClosenessData closeness_sums(const GraphView& view, int threads);

// ---- graph-level table assembly -------------------------------------------

struct CentralityOptions {
  MeasureSet measures;
  BetweennessMode betweenness_mode;
  int threads = 1;
  // Denominator n for degree centrality; defaults to the graph's own node
  // count. Subgraph callers pass the full-graph count unless a local-n
  // report was requested.
  std::optional<std::uint32_t> denominator_n;
};

CentralityTable compute_centralities(const ActorLinkGraph& graph, const CentralityOptions& options);

// Spec'd single-measure entry points.
CentralityTable degree_centrality(const ActorLinkGraph& graph);
CentralityTable closeness_centrality(const ActorLinkGraph& graph, int threads = 1);
CentralityTable betweenness_nodes(const ActorLinkGraph& graph, const BetweennessMode& mode,
                                  int threads = 1);
// Raw edge betweenness aligned with graph.edges().
std::vector<double> betweenness_edges(const ActorLinkGraph& graph, int threads = 1);

// k rows sorted by the column descending, ties broken by ascending label.
// Rows without a value for the column are skipped.
std::vector<CentralityRow> top_k(const CentralityTable& table, CentralityColumn column,
                                 std::size_t k);

// Two numeric columns per node: degree and degree centrality, in id order.
void scatter_export(const CentralityTable& table, std::ostream& out);

const char* to_string(CentralityColumn column);

}  // namespace coordnet
