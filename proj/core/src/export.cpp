#include "coordnet/export.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "coordnet/csv.hpp"
#include "coordnet/error.hpp"

namespace coordnet {

NodeCommunities communities_by_node(const CommunityPartition& partition) {
  NodeCommunities map;
  for (std::uint32_t c = 0; c < partition.communities.size(); ++c)
    for (NodeId v : partition.communities[c]) map[v] = c;
  return map;
}

NodeCommunities load_communities_json(const std::string& path, const ActorLinkGraph& graph) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open communities file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoFailure("cannot parse communities file " + path + ": " + e.what());
  }

  NodeCommunities map;
  if (!doc.contains("communities")) throw IoFailure("no 'communities' array in " + path);
  for (const auto& community : doc.at("communities")) {
    std::uint32_t id = community.at("id").get<std::uint32_t>();
    for (const auto& member : community.at("members")) {
      NodeKind kind = member.at("kind").get<std::string>() == "link" ? NodeKind::kLink
                                                                     : NodeKind::kActor;
      if (auto node = graph.find(kind, member.at("label").get<std::string>())) map[*node] = id;
    }
  }
  return map;
}

namespace {

// Stable per-file node ids: the label, disambiguated only on a cross-kind
// label collision.
std::vector<std::string> make_node_ids(const ActorLinkGraph& graph) {
  std::vector<std::string> ids(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    ids[v] = graph.label(v);
    if (graph.kind(v) == NodeKind::kLink &&
        graph.find(NodeKind::kActor, graph.label(v)).has_value())
      ids[v] += " (link)";
  }
  return ids;
}

struct ExportSelection {
  std::vector<NodeId> nodes;                   // included nodes
  std::vector<const WeightedEdge*> edges;      // both endpoints included
};

ExportSelection select(const ActorLinkGraph& graph,
                       const std::optional<NodeCommunities>& communities) {
  ExportSelection sel;
  for (NodeId v = 0; v < graph.node_count(); ++v)
    if (!communities || communities->count(v)) sel.nodes.push_back(v);
  for (const auto& e : graph.edges())
    if (!communities || (communities->count(e.u) && communities->count(e.v)))
      sel.edges.push_back(&e);
  return sel;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

}  // namespace

GephiFiles export_gephi_csv(const ActorLinkGraph& graph,
                            const std::optional<NodeCommunities>& communities,
                            const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);

  GephiFiles files;
  files.nodes_file = (std::filesystem::path(out_dir) / "nodes.csv").string();
  files.edges_file = (std::filesystem::path(out_dir) / "edges.csv").string();

  std::vector<std::string> ids = make_node_ids(graph);
  ExportSelection sel = select(graph, communities);

  std::sort(sel.nodes.begin(), sel.nodes.end(),
            [&](NodeId a, NodeId b) { return ids[a] < ids[b]; });

  std::ofstream nodes(files.nodes_file, std::ios::binary);
  if (!nodes) throw IoFailure("cannot open " + files.nodes_file);
  nodes << "Id,Label,kind,community,degree\n";
  for (NodeId v : sel.nodes) {
    nodes << csv::escape(ids[v]) << ',' << csv::escape(graph.label(v)) << ','
          << to_string(graph.kind(v)) << ',';
    if (communities) nodes << communities->at(v);
    nodes << ',' << graph.view().degree(v) << '\n';
  }
  if (!nodes) throw IoFailure("failed writing " + files.nodes_file);

  // Actor endpoint first on bipartite edges, smaller id otherwise.
  auto endpoints = [&](const WeightedEdge& e) {
    NodeId s = e.u, t = e.v;
    if (graph.kind(s) == NodeKind::kLink && graph.kind(t) == NodeKind::kActor) std::swap(s, t);
    if (graph.kind(s) == graph.kind(t) && ids[t] < ids[s]) std::swap(s, t);
    return std::make_pair(s, t);
  };
  std::sort(sel.edges.begin(), sel.edges.end(),
            [&](const WeightedEdge* a, const WeightedEdge* b) {
              auto [as, at] = endpoints(*a);
              auto [bs, bt] = endpoints(*b);
              if (ids[as] != ids[bs]) return ids[as] < ids[bs];
              return ids[at] < ids[bt];
            });

  std::ofstream edges(files.edges_file, std::ios::binary);
  if (!edges) throw IoFailure("cannot open " + files.edges_file);
  edges << "Source,Target,Weight\n";
  for (const WeightedEdge* e : sel.edges) {
    auto [s, t] = endpoints(*e);
    edges << csv::escape(ids[s]) << ',' << csv::escape(ids[t]) << ',' << e->weight << '\n';
  }
  if (!edges) throw IoFailure("failed writing " + files.edges_file);
  return files;
}

void export_gexf(const ActorLinkGraph& graph, const std::optional<NodeCommunities>& communities,
                 const std::string& out_file) {
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + out_file);

  std::vector<std::string> ids = make_node_ids(graph);
  ExportSelection sel = select(graph, communities);
  std::sort(sel.nodes.begin(), sel.nodes.end(),
            [&](NodeId a, NodeId b) { return ids[a] < ids[b]; });

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n";
  out << "  <graph defaultedgetype=\"undirected\">\n";
  out << "    <attributes class=\"node\">\n";
  out << "      <attribute id=\"0\" title=\"kind\" type=\"string\"/>\n";
  out << "      <attribute id=\"1\" title=\"community\" type=\"integer\"/>\n";
  out << "      <attribute id=\"2\" title=\"degree\" type=\"integer\"/>\n";
  out << "    </attributes>\n";
  out << "    <nodes>\n";
  for (NodeId v : sel.nodes) {
    out << "      <node id=\"" << xml_escape(ids[v]) << "\" label=\"" << xml_escape(graph.label(v))
        << "\">\n";
    out << "        <attvalues>\n";
    out << "          <attvalue for=\"0\" value=\"" << to_string(graph.kind(v)) << "\"/>\n";
    if (communities)
      out << "          <attvalue for=\"1\" value=\"" << communities->at(v) << "\"/>\n";
    out << "          <attvalue for=\"2\" value=\"" << graph.view().degree(v) << "\"/>\n";
    out << "        </attvalues>\n";
    out << "      </node>\n";
  }
  out << "    </nodes>\n";
  out << "    <edges>\n";
  std::uint32_t edge_id = 0;
  for (const WeightedEdge* e : sel.edges) {
    out << "      <edge id=\"" << edge_id++ << "\" source=\"" << xml_escape(ids[e->u])
        << "\" target=\"" << xml_escape(ids[e->v]) << "\" weight=\"" << e->weight << "\"/>\n";
  }
  out << "    </edges>\n";
  out << "  </graph>\n";
  out << "</gexf>\n";
  if (!out) throw IoFailure("failed writing " + out_file);
}

}  // namespace coordnet
