#include "coordnet/communities.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coordnet/components.hpp"
#include "coordnet/error.hpp"
#include "coordnet/metrics.hpp"

namespace coordnet {

namespace {

std::uint32_t component_count(const GraphView& view) {
  if (view.node_count == 0) return 0;
  auto ids = component_ids_bfs(view);
  return *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<std::vector<NodeId>> grouped_components(const GraphView& view) {
  auto ids = component_ids_bfs(view);
  std::uint32_t count = view.node_count ? *std::max_element(ids.begin(), ids.end()) + 1 : 0;
  std::vector<std::vector<NodeId>> groups(count);
  for (NodeId v = 0; v < view.node_count; ++v) groups[ids[v]].push_back(v);
  return groups;
}

}  // namespace

CommunityPartition girvan_newman(const ActorLinkGraph& graph, const GirvanNewmanOptions& options) {
  if (options.target_k < 2) throw Error("girvan-newman target_k must be at least 2");

  CommunityPartition result;
  result.target_k = options.target_k;
  result.scope = options.scope;
  if (options.fast) {
    result.fast_mode = true;
    result.fast_pivots = options.fast->first;
    result.fast_seed = options.fast->second;
  }

  // Scope selection.
  std::vector<NodeId> scope_nodes;
  if (options.scope == CommunityScope::kLargestComponent) {
    if (graph.node_count() == 0)
      throw DisconnectedInput("largest-component scope on an empty graph");
    ComponentPartition parts = connected_components(graph);
    scope_nodes = parts.components.front();
  } else {
    scope_nodes.resize(graph.node_count());
    std::iota(scope_nodes.begin(), scope_nodes.end(), 0u);
  }
  Subgraph scope = induced_subgraph(graph, scope_nodes);
  const std::uint32_t n = scope.csr.node_count;

  auto label_of = [&](NodeId local) -> const std::string& {
    return graph.label(scope.to_parent[local]);
  };

  std::vector<std::pair<NodeId, NodeId>> alive = scope.csr.edges;
  Csr working = std::move(scope.csr);
  std::uint32_t count = component_count(working.view());
  const std::uint64_t removal_cap =
      options.max_removals ? options.max_removals : alive.size();

  while (count < options.target_k) {
    if (alive.empty() || result.removal_log.size() >= removal_cap) break;

    BetweennessMode mode;
    if (options.fast) {
      mode.kind = BetweennessKind::kSampled;
      mode.pivots = std::min(options.fast->first, n);
      mode.seed = options.fast->second;
    }
    std::vector<double> eb = brandes_edge_betweenness(working.view(), mode, options.threads);

    // Maximum betweenness; ties fall to the smallest ordered label pair.
    std::size_t best = 0;
    auto ordered_labels = [&](std::size_t e) {
      const std::string& a = label_of(working.edges[e].first);
      const std::string& b = label_of(working.edges[e].second);
      return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (std::size_t e = 1; e < working.edges.size(); ++e) {
      if (eb[e] > eb[best] || (eb[e] == eb[best] && ordered_labels(e) < ordered_labels(best)))
        best = e;
    }

    RemovalLogEntry entry;
    std::tie(entry.label_u, entry.label_v) = ordered_labels(best);
    entry.edge_betweenness = eb[best];

    alive = working.edges;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(best));
    working = csr_from_edges(n, alive);
    count = component_count(working.view());
    entry.components_after = count;
    result.removal_log.push_back(std::move(entry));
  }
  result.target_reached = count >= options.target_k;

  // Final communities: components of the working graph, size desc with the
  // smallest-label tie-break, mapped back to parent ids.
  std::vector<std::vector<NodeId>> groups = grouped_components(working.view());
  std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    auto min_label = [&](const std::vector<NodeId>& c) {
      const std::string* best_label = &label_of(c.front());
      for (NodeId v : c)
        if (label_of(v) < *best_label) best_label = &label_of(v);
      return best_label;
    };
    return *min_label(a) < *min_label(b);
  });

  std::vector<std::uint32_t> community_of(n, 0);
  for (std::uint32_t c = 0; c < groups.size(); ++c)
    for (NodeId v : groups[c]) community_of[v] = c;

  // Modularity diagnostic over the scope graph (original induced edges,
  // including the removed ones).
  {
    Subgraph fresh = induced_subgraph(graph, scope_nodes);
    const double m = static_cast<double>(fresh.csr.edges.size());
    if (m > 0) {
      std::vector<double> intra(groups.size(), 0.0);
      std::vector<double> degree_sum(groups.size(), 0.0);
      for (const auto& [u, v] : fresh.csr.edges) {
        if (community_of[u] == community_of[v]) intra[community_of[u]] += 1.0;
      }
      GraphView fv = fresh.csr.view();
      for (NodeId v = 0; v < n; ++v) degree_sum[community_of[v]] += fv.degree(v);
      double q = 0.0;
      for (std::uint32_t c = 0; c < groups.size(); ++c) {
        double frac = degree_sum[c] / (2.0 * m);
        q += intra[c] / m - frac * frac;
      }
      result.modularity = q;
    }
  }

  result.communities.reserve(groups.size());
  result.lead_actor_per_community.reserve(groups.size());
  for (const auto& group : groups) {
    std::vector<NodeId> parents;
    parents.reserve(group.size());
    for (NodeId v : group) parents.push_back(scope.to_parent[v]);
    std::sort(parents.begin(), parents.end());

    std::optional<LeadActor> lead;
    for (NodeId p : parents) {
      if (graph.kind(p) != NodeKind::kActor) continue;
      std::uint32_t d = graph.degree(p);
      if (!lead || d > lead->degree || (d == lead->degree && graph.label(p) < lead->label))
        lead = LeadActor{graph.label(p), d};
    }
    result.communities.push_back(std::move(parents));
    result.lead_actor_per_community.push_back(std::move(lead));
  }
  return result;
}

std::vector<CommunityReportEntry> community_summary(const CommunityPartition& partition,
                                                    const ActorLinkGraph& graph, std::size_t top) {
  std::vector<CommunityReportEntry> report;
  report.reserve(partition.communities.size());

  for (const auto& community : partition.communities) {
    CommunityReportEntry entry;
    entry.size = static_cast<std::uint32_t>(community.size());

    Subgraph sub = induced_subgraph(graph, community);
    entry.internal_edges = static_cast<std::uint32_t>(sub.csr.edges.size());

    auto collect = [&](NodeKind kind) {
      std::vector<std::pair<std::string, std::uint32_t>> rows;
      for (NodeId p : community)
        if (graph.kind(p) == kind) rows.emplace_back(graph.label(p), graph.degree(p));
      std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      if (rows.size() > top) rows.resize(top);
      return rows;
    };
    entry.top_actors = collect(NodeKind::kActor);
    entry.top_links = collect(NodeKind::kLink);
    report.push_back(std::move(entry));
  }
  return report;
}

}  // namespace coordnet
