#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coordnet/graph.hpp"

namespace coordnet {

struct ComponentPartition {
  std::vector<std::uint32_t> component_of;      // node id -> index into components
  std::vector<std::vector<NodeId>> components;  // size desc, ties by smallest min label
};

// Raw component ids (arbitrary numbering), one per node. Two independent
// implementations; they must induce the same partition.
std::vector<std::uint32_t> component_ids_bfs(const GraphView& view);
std::vector<std::uint32_t> component_ids_union_find(const GraphView& view);

ComponentPartition connected_components(const ActorLinkGraph& graph);

struct DistanceEstimateInfo {
  bool sampled = false;
  std::uint32_t sources = 0;  // BFS sources used when sampled
  std::uint64_t seed = 0;
};

struct MaxCentralNode {
  std::string label;
  double degree_centrality = 0.0;
  std::optional<double> closeness;  // raw, 1/sum
  double betweenness = 0.0;         // raw
};

struct ComponentSummary {
  std::uint32_t order_rank = 0;  // 1 = largest
  std::uint32_t node_count = 0;
  std::uint32_t edge_count = 0;
  double avg_distance = 0.0;  // mean over connected unordered pairs
  DistanceEstimateInfo avg_distance_mode;
  MaxCentralNode max_central;
  bool maxima_agree = false;        // degree/closeness/betweenness argmaxes coincide
  bool betweenness_sampled = false;
  bool closeness_estimated = false;
};

struct SummaryOptions {
  std::uint32_t exact_distance_threshold = 10000;  // all-pairs BFS up to this size
  std::uint32_t sample_sources = 256;
  std::uint64_t seed = 0;
  std::uint32_t betweenness_sample_threshold = 50000;
  std::uint32_t betweenness_pivots = 256;
  int threads = 1;
  bool local_n = false;  // degree-centrality denominator: component-local n
};

ComponentSummary summarize_component(const ActorLinkGraph& graph, const std::vector<NodeId>& component,
                                     std::uint32_t order_rank, const SummaryOptions& options = {});

// Summaries for the k largest components (clamped to the component count).
std::vector<ComponentSummary> top_components_report(const ActorLinkGraph& graph, std::size_t k,
                                                    const SummaryOptions& options = {});

}  // namespace coordnet
