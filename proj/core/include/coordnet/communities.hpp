#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coordnet/graph.hpp"

namespace coordnet {

enum class CommunityScope { kLargestComponent, kWholeGraph };

struct GirvanNewmanOptions {
  CommunityScope scope = CommunityScope::kLargestComponent;
  std::uint32_t target_k = 2;
  std::uint32_t max_removals = 0;  // 0: no cap beyond the edge count
  std::optional<std::pair<std::uint32_t, std::uint64_t>> fast;  // sampled pivots, seed
  int threads = 1;
};

struct RemovalLogEntry {
  std::string label_u;  // label_u < label_v
  std::string label_v;
  double edge_betweenness = 0.0;
  std::uint32_t components_after = 0;
};

struct LeadActor {
  std::string label;
  std::uint32_t degree = 0;
};

struct CommunityPartition {
  std::vector<std::vector<NodeId>> communities;  // parent-graph ids, size desc
  std::vector<std::optional<LeadActor>> lead_actor_per_community;
  std::vector<RemovalLogEntry> removal_log;
  std::uint32_t target_k = 0;
  bool target_reached = false;
  CommunityScope scope = CommunityScope::kLargestComponent;
  bool fast_mode = false;
  std::uint32_t fast_pivots = 0;
  std::uint64_t fast_seed = 0;
  double modularity = 0.0;  // diagnostic over the scope graph
};

// Iteratively removes the edge of maximum edge betweenness (recomputed after
// every removal) until the working graph splits into target_k components or
// max_removals is exhausted. Ties break on the smallest (label_u, label_v)
// pair. Communities are the final connected components.
CommunityPartition girvan_newman(const ActorLinkGraph& graph, const GirvanNewmanOptions& options);

struct CommunityReportEntry {
  std::uint32_t size = 0;
  std::uint32_t internal_edges = 0;  // induced edges of the original graph
  std::vector<std::pair<std::string, std::uint32_t>> top_actors;  // label, degree
  std::vector<std::pair<std::string, std::uint32_t>> top_links;
};

std::vector<CommunityReportEntry> community_summary(const CommunityPartition& partition,
                                                    const ActorLinkGraph& graph,
                                                    std::size_t top = 10);

}  // namespace coordnet
