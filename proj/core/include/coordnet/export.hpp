#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coordnet/communities.hpp"
#include "coordnet/graph.hpp"

namespace coordnet {

// node id -> community index; nodes without an entry are outside the
// partition and are dropped from restricted exports.
using NodeCommunities = std::unordered_map<NodeId, std::uint32_t>;

NodeCommunities communities_by_node(const CommunityPartition& partition);

// Reads a communities.json artifact back, matching members to the graph by
// (kind, label). Members missing from the graph are ignored.
NodeCommunities load_communities_json(const std::string& path, const ActorLinkGraph& graph);

struct GephiFiles {
  std::string nodes_file;
  std::string edges_file;
};

// Gephi import CSVs: nodes file with header "Id,Label,kind,community,degree"
// and edges file with "Source,Target,Weight". Ids are node labels; in the
// (unlikely) event an actor and a link share a label, the link Id gets a
// " (link)" suffix to keep Ids unique. UTF-8, LF, RFC-4180 quoting; node
// rows sorted by Id, edge rows by (Source, Target).
GephiFiles export_gephi_csv(const ActorLinkGraph& graph,
                            const std::optional<NodeCommunities>& communities,
                            const std::string& out_dir);

// GEXF 1.2, undirected, node attributes kind/community/degree.
void export_gexf(const ActorLinkGraph& graph, const std::optional<NodeCommunities>& communities,
                 const std::string& out_file);

}  // namespace coordnet
