#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coordnet/ingest.hpp"

namespace coordnet {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { kActor = 0, kLink = 1 };

const char* to_string(NodeKind kind);

// Read-only adjacency in CSR form. All metric algorithms run against this
// view so they work unchanged on whole graphs, induced subgraphs, and the
// shrinking working graph of the community loop.
struct GraphView {
  std::uint32_t node_count = 0;
  std::uint32_t edge_count = 0;
  std::span<const std::uint32_t> offsets;   // node_count + 1
  std::span<const NodeId> neighbors;        // 2 * edge_count, sorted per node
  std::span<const std::uint32_t> arc_edge;  // undirected edge id per arc

  std::span<const NodeId> neighbors_of(NodeId u) const {
    return neighbors.subspan(offsets[u], offsets[u + 1] - offsets[u]);
  }
  std::uint32_t degree(NodeId u) const { return offsets[u + 1] - offsets[u]; }
};

// Owning CSR plus the canonical edge list (u < v, edge id = index).
struct Csr {
  std::uint32_t node_count = 0;
  std::vector<std::uint32_t> offsets;
  std::vector<NodeId> neighbors;
  std::vector<std::uint32_t> arc_edge;
  std::vector<std::pair<NodeId, NodeId>> edges;

  GraphView view() const {
    return GraphView{node_count, static_cast<std::uint32_t>(edges.size()), offsets, neighbors,
                     arc_edge};
  }
};

// Builds a CSR from a list of distinct undirected edges (self-loops not
// allowed; endpoint order within a pair does not matter).
Csr csr_from_edges(std::uint32_t node_count, std::vector<std::pair<NodeId, NodeId>> edges);

struct WeightedEdge {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  std::int64_t weight = 0;
};

// Undirected simple graph over interned (kind, label) nodes. Share
// multiplicity is kept as edge weight; the adjacency itself is simple.
class ActorLinkGraph {
 public:
  std::uint32_t node_count() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

  NodeKind kind(NodeId id) const { return kinds_[id]; }
  const std::string& label(NodeId id) const { return labels_[id]; }

  std::optional<NodeId> find(NodeKind kind, std::string_view label) const;

  // Unweighted neighbor count. Throws UnknownNode for an invalid id.
  std::uint32_t degree(NodeId id) const;
  std::span<const NodeId> neighbors(NodeId id) const { return csr_.view().neighbors_of(id); }

  // 2m / n. Throws EmptyGraph on a node-less graph.
  double average_degree() const;

  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::int64_t edge_weight(NodeId u, NodeId v) const;
  std::int64_t total_share_count() const;  // sum of edge weights

  GraphView view() const { return csr_.view(); }

  friend class GraphBuilder;

 private:
  std::vector<std::string> labels_;
  std::vector<NodeKind> kinds_;
  std::vector<WeightedEdge> edges_;  // sorted by (u, v); id = index
  Csr csr_;
  std::unordered_map<std::string, NodeId> index_by_kind_[2];
};

class GraphBuilder {
 public:
  NodeId intern(NodeKind kind, std::string_view label);
  // Accumulates weight over repeated (a, b) pairs. Throws on self-loops.
  void add_edge(NodeId a, NodeId b, std::int64_t weight = 1);
  void add_share(std::string_view actor, std::string_view url);

  ActorLinkGraph build();

 private:
  std::vector<std::string> labels_;
  std::vector<NodeKind> kinds_;
  std::unordered_map<std::string, NodeId> index_by_kind_[2];
  std::unordered_map<std::uint64_t, std::int64_t> weights_;  // (min,max) packed
};

struct BuildGraphOptions {
  bool normalize_urls = false;  // lowercase scheme+host before interning
};

// Maps account.name -> expandedLinks.original share pairs into the graph.
// Records without a link contribute nothing. Throws EmptyGraph when no
// record carries a link.
ActorLinkGraph build_graph(const Dataset& dataset, const BuildGraphOptions& options = {});

std::string normalize_url(std::string_view url);

// Induced subgraph with dense local ids; to_parent maps local -> parent id.
struct Subgraph {
  std::vector<NodeId> to_parent;
  Csr csr;
};

Subgraph induced_subgraph(const ActorLinkGraph& graph, std::span<const NodeId> nodes);

// Versioned binary snapshot (see README for the layout).
void save_graph(const ActorLinkGraph& graph, const std::string& path);
ActorLinkGraph load_graph(const std::string& path);

}  // namespace coordnet
