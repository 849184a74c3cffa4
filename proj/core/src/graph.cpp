#include "coordnet/graph.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "coordnet/error.hpp"

namespace coordnet {

namespace {

inline std::uint64_t pack_pair(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

const char* to_string(NodeKind kind) { return kind == NodeKind::kActor ? "actor" : "link"; }

Csr csr_from_edges(std::uint32_t node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error("self-loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());

  Csr csr;
  csr.node_count = node_count;
  csr.edges = std::move(edges);
  csr.offsets.assign(node_count + 1, 0);
  for (const auto& [u, v] : csr.edges) {
    ++csr.offsets[u + 1];
    ++csr.offsets[v + 1];
  }
  for (std::uint32_t i = 0; i < node_count; ++i) csr.offsets[i + 1] += csr.offsets[i];

  csr.neighbors.resize(csr.edges.size() * 2);
  csr.arc_edge.resize(csr.edges.size() * 2);
  std::vector<std::uint32_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (std::uint32_t e = 0; e < csr.edges.size(); ++e) {
    auto [u, v] = csr.edges[e];
    csr.neighbors[cursor[u]] = v;
    csr.arc_edge[cursor[u]++] = e;
    csr.neighbors[cursor[v]] = u;
    csr.arc_edge[cursor[v]++] = e;
  }
  // Neighbor lists come out sorted because the edge list is sorted by (u,v)
  // and, for the reverse arcs, by v within each u. Verify the cheap half.
  return csr;
}

std::optional<NodeId> ActorLinkGraph::find(NodeKind kind, std::string_view label) const {
  const auto& index = index_by_kind_[static_cast<std::size_t>(kind)];
  auto it = index.find(std::string(label));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ActorLinkGraph::degree(NodeId id) const {
  if (id >= node_count()) throw UnknownNode("node id " + std::to_string(id) + " out of range");
  return csr_.view().degree(id);
}

double ActorLinkGraph::average_degree() const {
  if (node_count() == 0) throw EmptyGraph("average degree of an empty graph");
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(node_count());
}

std::int64_t ActorLinkGraph::edge_weight(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                             [](const WeightedEdge& e, const std::pair<NodeId, NodeId>& key) {
                               return std::make_pair(e.u, e.v) < key;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return 0;
  return it->weight;
}

std::int64_t ActorLinkGraph::total_share_count() const {
  std::int64_t total = 0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

NodeId GraphBuilder::intern(NodeKind kind, std::string_view label) {
  auto& index = index_by_kind_[static_cast<std::size_t>(kind)];
  auto it = index.find(std::string(label));
  if (it != index.end()) return it->second;
  NodeId id = static_cast<NodeId>(labels_.size());
  labels_.emplace_back(label);
  kinds_.push_back(kind);
  index.emplace(labels_.back(), id);
  return id;
}

void GraphBuilder::add_edge(NodeId a, NodeId b, std::int64_t weight) {
  if (a == b) throw Error("self-loops are not allowed");
  if (a >= labels_.size() || b >= labels_.size()) throw UnknownNode("add_edge on unknown node");
  weights_[pack_pair(a, b)] += weight;
}

void GraphBuilder::add_share(std::string_view actor, std::string_view url) {
  add_edge(intern(NodeKind::kActor, actor), intern(NodeKind::kLink, url));
}

ActorLinkGraph GraphBuilder::build() {
  ActorLinkGraph g;
  g.labels_ = std::move(labels_);
  g.kinds_ = std::move(kinds_);
  g.index_by_kind_[0] = std::move(index_by_kind_[0]);
  g.index_by_kind_[1] = std::move(index_by_kind_[1]);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(weights_.size());
  for (const auto& [key, _] : weights_)
    pairs.emplace_back(static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xFFFFFFFFu));
  g.csr_ = csr_from_edges(g.node_count(), std::move(pairs));

  g.edges_.reserve(g.csr_.edges.size());
  for (const auto& [u, v] : g.csr_.edges)
    g.edges_.push_back(WeightedEdge{u, v, weights_.at(pack_pair(u, v))});
  weights_.clear();
  return g;
}

std::string normalize_url(std::string_view url) {
  std::string out(url);
  std::size_t host_end = out.size();
  std::size_t host_start = 0;
  if (auto scheme = out.find("://"); scheme != std::string::npos) host_start = scheme + 3;
  for (std::size_t i = host_start; i < out.size(); ++i) {
    if (out[i] == '/' || out[i] == '?' || out[i] == '#') {
      host_end = i;
      break;
    }
  }
  for (std::size_t i = 0; i < host_end; ++i) {
    char& c = out[i];
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  }
  return out;
}

ActorLinkGraph build_graph(const Dataset& dataset, const BuildGraphOptions& options) {
  GraphBuilder builder;
  bool any_edge = false;
  for (const auto& rec : dataset.records) {
    if (!rec.link_original || rec.link_original->empty()) continue;
    any_edge = true;
    if (options.normalize_urls)
      builder.add_share(rec.account_name, normalize_url(*rec.link_original));
    else
      builder.add_share(rec.account_name, *rec.link_original);
  }
  if (!any_edge) throw EmptyGraph("no record carries a shared link");
  return builder.build();
}

Subgraph induced_subgraph(const ActorLinkGraph& graph, std::span<const NodeId> nodes) {
  Subgraph sub;
  sub.to_parent.assign(nodes.begin(), nodes.end());
  std::unordered_map<NodeId, NodeId> to_local;
  to_local.reserve(nodes.size());
  for (std::uint32_t i = 0; i < sub.to_parent.size(); ++i) to_local[sub.to_parent[i]] = i;

  std::vector<std::pair<NodeId, NodeId>> edges;
  GraphView view = graph.view();
  for (NodeId local_u = 0; local_u < sub.to_parent.size(); ++local_u) {
    NodeId u = sub.to_parent[local_u];
    for (NodeId v : view.neighbors_of(u)) {
      if (v <= u) continue;  // count each edge once
      auto it = to_local.find(v);
      if (it != to_local.end()) edges.emplace_back(local_u, it->second);
    }
  }
  sub.csr = csr_from_edges(static_cast<std::uint32_t>(sub.to_parent.size()), std::move(edges));
  return sub;
}

namespace {

constexpr char kMagic[8] = {'C', 'N', 'E', 'T', 'G', 'R', 'P', 'H'};
constexpr std::uint32_t kSnapshotVersion = 1;

template <typename T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_pod(std::istream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoFailure("graph snapshot truncated");
}

}  // namespace

void save_graph(const ActorLinkGraph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open graph snapshot for writing: " + path);
  out.write(kMagic, sizeof(kMagic));
  write_pod(out, kSnapshotVersion);
  write_pod(out, static_cast<std::uint64_t>(graph.node_count()));
  write_pod(out, static_cast<std::uint64_t>(graph.edge_count()));
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    write_pod(out, static_cast<std::uint8_t>(graph.kind(id)));
    const std::string& label = graph.label(id);
    write_pod(out, static_cast<std::uint32_t>(label.size()));
    out.write(label.data(), static_cast<std::streamsize>(label.size()));
  }
  for (const auto& e : graph.edges()) {
    write_pod(out, e.u);
    write_pod(out, e.v);
    write_pod(out, e.weight);
  }
  if (!out) throw IoFailure("failed writing graph snapshot: " + path);
}

ActorLinkGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open graph snapshot: " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw IoFailure("not a coordnet graph snapshot: " + path);
  std::uint32_t version;
  read_pod(in, version);
  if (version != kSnapshotVersion)
    throw IoFailure("unsupported graph snapshot version " + std::to_string(version));

  std::uint64_t node_count, edge_count;
  read_pod(in, node_count);
  read_pod(in, edge_count);

  GraphBuilder builder;
  std::string label;
  for (std::uint64_t i = 0; i < node_count; ++i) {
    std::uint8_t kind;
    read_pod(in, kind);
    if (kind > 1) throw IoFailure("corrupt node kind in graph snapshot");
    std::uint32_t len;
    read_pod(in, len);
    label.resize(len);
    in.read(label.data(), len);
    if (!in) throw IoFailure("graph snapshot truncated");
    NodeId id = builder.intern(static_cast<NodeKind>(kind), label);
    if (id != i) throw IoFailure("duplicate node label in graph snapshot");
  }
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    NodeId u, v;
    std::int64_t w;
    read_pod(in, u);
    read_pod(in, v);
    read_pod(in, w);
    if (u >= node_count || v >= node_count || w < 1)
      throw IoFailure("corrupt edge in graph snapshot");
    builder.add_edge(u, v, w);
  }
  return builder.build();
}

}  // namespace coordnet
