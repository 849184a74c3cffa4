#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "coordnet/error.hpp"
#include "coordnet/metrics.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace coordnet;
using namespace testsupport;

TEST_CASE("degree centrality on a path") {
  CentralityTable table = degree_centrality(path_graph(3));
  CHECK(table.rows[1].degree_centrality == doctest::Approx(1.0));
  CHECK(table.rows[0].degree_centrality == doctest::Approx(0.5));
  CHECK(table.rows[2].degree_centrality == doctest::Approx(0.5));
}

TEST_CASE("degree centrality is exactly degree over n minus one") {
  ActorLinkGraph g = random_graph(8, 0.4, 42);
  CentralityTable table = degree_centrality(g);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    // bitwise identical to the direct formula
    CHECK(table.rows[v].degree_centrality == static_cast<double>(g.degree(v)) / 7.0);
  }
}

TEST_CASE("degree centrality rejects degenerate graphs") {
  GraphBuilder empty;
  ActorLinkGraph none = empty.build();
  CHECK_THROWS_AS(degree_centrality(none), EmptyGraph);
  GraphBuilder one;
  one.intern(NodeKind::kActor, "solo");
  ActorLinkGraph single = one.build();
  CHECK_THROWS_AS(degree_centrality(single), SingleNode);
}

TEST_CASE("closeness on small shapes") {
  CentralityTable path = closeness_centrality(path_graph(3));
  CHECK(*path.rows[1].closeness_raw == doctest::Approx(0.5));
  CHECK(*path.rows[0].closeness_raw == doctest::Approx(1.0 / 3.0));

  CentralityTable star = closeness_centrality(star_graph(3));
  CHECK(*star.rows[0].closeness_raw == doctest::Approx(1.0 / 3.0));
  // normalized variant scales by |comp|-1
  CHECK(*star.rows[0].closeness_normalized == doctest::Approx(1.0));
}

TEST_CASE("closeness is absent for isolated nodes") {
  ActorLinkGraph g = from_edges(3, {{0, 1}});
  CentralityTable table = closeness_centrality(g);
  CHECK(table.rows[0].closeness_raw.has_value());
  CHECK_FALSE(table.rows[2].closeness_raw.has_value());
}

TEST_CASE("closeness matches the all-pairs oracle on a seeded graph") {
  ActorLinkGraph g = random_connected_graph(10, 8, 7);
  CentralityTable table = closeness_centrality(g);
  std::vector<double> sums = bruteforce_distance_sums(g.view());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    REQUIRE(table.rows[v].closeness_raw.has_value());
    CHECK(std::abs(*table.rows[v].closeness_raw - 1.0 / sums[v]) <= 1e-12);
  }
}

TEST_CASE("node betweenness on a path and a star") {
  BetweennessMode exact;
  CentralityTable p3 = betweenness_nodes(path_graph(3), exact);
  CHECK(*p3.rows[1].betweenness_raw == doctest::Approx(1.0));
  CHECK(*p3.rows[1].betweenness_normalized == doctest::Approx(1.0));
  CHECK(*p3.rows[0].betweenness_raw == doctest::Approx(0.0));

  CentralityTable star = betweenness_nodes(star_graph(4), exact);
  CHECK(*star.rows[0].betweenness_raw == doctest::Approx(6.0));  // C(4,2)
  CHECK(*star.rows[0].betweenness_normalized == doctest::Approx(1.0));
}

TEST_CASE("edge betweenness on canonical shapes") {
  ActorLinkGraph single = from_edges(2, {{0, 1}});
  std::vector<double> eb = betweenness_edges(single);
  CHECK(eb[0] == doctest::Approx(1.0));

  ActorLinkGraph barbell = barbell_graph();
  std::vector<double> beb = betweenness_edges(barbell);
  // bridge edge (2,3) carries all nine cross pairs
  std::size_t bridge = 0;
  for (std::size_t e = 0; e < barbell.edges().size(); ++e)
    if (barbell.edges()[e].u == 2 && barbell.edges()[e].v == 3) bridge = e;
  CHECK(beb[bridge] == doctest::Approx(9.0));

  // P4 interior edge carries 4 pairs, outer edges 3
  ActorLinkGraph p4 = path_graph(4);
  std::vector<double> p4eb = betweenness_edges(p4);
  std::map<std::pair<NodeId, NodeId>, double> by_pair;
  for (std::size_t e = 0; e < p4.edges().size(); ++e)
    by_pair[{p4.edges()[e].u, p4.edges()[e].v}] = p4eb[e];
  CHECK(by_pair[{0, 1}] == doctest::Approx(3.0));
  CHECK(by_pair[{1, 2}] == doctest::Approx(4.0));
  CHECK(by_pair[{2, 3}] == doctest::Approx(3.0));

  GraphBuilder lonely;
  lonely.intern(NodeKind::kActor, "x");
  CHECK_THROWS_AS(betweenness_edges(lonely.build()), EmptyGraph);
}

TEST_CASE("brandes matches the path-enumeration oracle on small graphs") {
  std::mt19937_64 seeds(2024);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<std::uint32_t> size(2, 8);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    ActorLinkGraph g = random_graph(size(seeds), density(seeds), seeds());
    GraphView view = g.view();

    std::vector<double> fast = brandes_node_betweenness(view, BetweennessMode{}, 1);
    std::vector<double> slow = bruteforce_node_betweenness(view);
    for (NodeId v = 0; v < view.node_count; ++v) CHECK(std::abs(fast[v] - slow[v]) <= 1e-9);

    if (view.edge_count > 0) {
      std::vector<double> fast_e = brandes_edge_betweenness(view, BetweennessMode{}, 1);
      std::vector<double> slow_e = bruteforce_edge_betweenness(view);
      for (std::uint32_t e = 0; e < view.edge_count; ++e)
        CHECK(std::abs(fast_e[e] - slow_e[e]) <= 1e-9);
    }
  }
}

TEST_CASE("edge betweenness totals equal the sum of pairwise distances") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    ActorLinkGraph g = random_connected_graph(9, 6, seed);
    GraphView view = g.view();
    std::vector<double> eb = brandes_edge_betweenness(view, BetweennessMode{}, 1);
    double edge_total = 0;
    for (double x : eb) edge_total += x;
    auto dist = floyd_warshall(view);
    double pair_total = 0;
    for (std::uint32_t s = 0; s < view.node_count; ++s)
      for (std::uint32_t t = s + 1; t < view.node_count; ++t)
        if (dist[s][t] > 0) pair_total += dist[s][t];
    CHECK(edge_total == doctest::Approx(pair_total).epsilon(1e-9));
  }
}

TEST_CASE("sampling every node reproduces exact betweenness bit for bit") {
  ActorLinkGraph g = random_graph(12, 0.3, 77);
  GraphView view = g.view();
  std::vector<double> exact = brandes_node_betweenness(view, BetweennessMode{}, 1);
  BetweennessMode all{BetweennessKind::kSampled, view.node_count, 123};
  std::vector<double> sampled = brandes_node_betweenness(view, all, 1);
  for (NodeId v = 0; v < view.node_count; ++v) CHECK(sampled[v] == exact[v]);
}

TEST_CASE("sampled betweenness approximates exact on a larger graph") {
  ActorLinkGraph g = random_connected_graph(300, 500, 11);
  GraphView view = g.view();
  std::vector<double> exact = brandes_node_betweenness(view, BetweennessMode{}, 2);
  BetweennessMode mode{BetweennessKind::kSampled, 150, 5};
  std::vector<double> approx = brandes_node_betweenness(view, mode, 2);
  double max_exact = *std::max_element(exact.begin(), exact.end());
  // crude but stable: the argmax region should stay prominent
  NodeId argmax = static_cast<NodeId>(std::max_element(exact.begin(), exact.end()) - exact.begin());
  CHECK(approx[argmax] >= 0.3 * max_exact);
}

TEST_CASE("pivot counts above n are rejected") {
  ActorLinkGraph g = path_graph(4);
  BetweennessMode mode{BetweennessKind::kSampled, 9, 0};
  CHECK_THROWS_AS(brandes_node_betweenness(g.view(), mode, 1), PivotsExceedNodes);
}

TEST_CASE("worker count never changes the result") {
  ActorLinkGraph g = random_connected_graph(60, 90, 3);
  GraphView view = g.view();
  for (BetweennessMode mode : {BetweennessMode{}, BetweennessMode{BetweennessKind::kSampled, 17, 9}}) {
    std::vector<double> one = brandes_node_betweenness(view, mode, 1);
    std::vector<double> four = brandes_node_betweenness(view, mode, 4);
    std::vector<double> seven = brandes_node_betweenness(view, mode, 7);
    CHECK(one == four);
    CHECK(one == seven);
  }
  std::vector<double> eb1 = brandes_edge_betweenness(view, BetweennessMode{}, 1);
  std::vector<double> eb4 = brandes_edge_betweenness(view, BetweennessMode{}, 4);
  CHECK(eb1 == eb4);

  ClosenessData c1 = closeness_sums(view, 1);
  ClosenessData c4 = closeness_sums(view, 4);
  CHECK(c1.distance_sum == c4.distance_sum);
}

TEST_CASE("relabeling permutes centralities") {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  ActorLinkGraph g = from_edges(4, edges);

  // a graph with the same structure but nodes interned in reverse label order
  GraphBuilder builder;
  for (int i = 3; i >= 0; --i) builder.intern(NodeKind::kActor, node_label(static_cast<std::uint32_t>(i)));
  for (auto [u, v] : edges) builder.add_edge(3 - u, 3 - v);
  ActorLinkGraph h = builder.build();

  CentralityOptions options;
  options.measures = MeasureSet{true, true, true};
  CentralityTable tg = compute_centralities(g, options);
  CentralityTable th = compute_centralities(h, options);
  for (NodeId v = 0; v < 4; ++v) {
    auto hv = h.find(NodeKind::kActor, g.label(v));
    REQUIRE(hv.has_value());
    CHECK(tg.rows[v].degree_centrality == th.rows[*hv].degree_centrality);
    CHECK(*tg.rows[v].closeness_raw == doctest::Approx(*th.rows[*hv].closeness_raw));
    CHECK(*tg.rows[v].betweenness_raw == doctest::Approx(*th.rows[*hv].betweenness_raw));
  }
}

TEST_CASE("degree argmax equals degree-centrality argmax") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ActorLinkGraph g = random_graph(10, 0.35, seed);
    if (g.node_count() < 2) continue;
    CentralityTable table = degree_centrality(g);
    auto by_degree = std::max_element(table.rows.begin(), table.rows.end(),
                                      [](const auto& a, const auto& b) { return a.degree < b.degree; });
    auto by_centrality =
        std::max_element(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
          return a.degree_centrality < b.degree_centrality;
        });
    CHECK(by_degree->degree == by_centrality->degree);
  }
}

TEST_CASE("top_k sorts by value then label") {
  CentralityTable p3 = degree_centrality(path_graph(3));
  auto top = top_k(p3, CentralityColumn::kDegreeCentrality, 1);
  REQUIRE(top.size() == 1);
  CHECK(top[0].label == node_label(1));
  CHECK(top[0].degree_centrality == doctest::Approx(1.0));

  // all four nodes of a cycle tie; order is label order
  CentralityTable c4 = degree_centrality(cycle_graph(4));
  auto all = top_k(c4, CentralityColumn::kDegreeCentrality, 10);
  REQUIRE(all.size() == 4);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].label < all[i].label);
}

TEST_CASE("top_k refuses missing columns") {
  CentralityTable table = degree_centrality(path_graph(3));
  CHECK_THROWS_AS(top_k(table, CentralityColumn::kBetweenness, 3), ColumnNotComputed);
}

TEST_CASE("scatter export matches the table and re-parses") {
  CentralityTable p3 = degree_centrality(path_graph(3));
  std::ostringstream out;
  scatter_export(p3, out);
  CHECK(out.str() == "1,0.5\n2,1\n1,0.5\n");

  ActorLinkGraph g = random_graph(8, 0.5, 42);
  CentralityTable table = degree_centrality(g);
  std::ostringstream big;
  scatter_export(table, big);
  std::istringstream in(big.str());
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::stoul(line.substr(0, comma)) == table.rows[row].degree);
    double dc = 0;
    auto tail = line.substr(comma + 1);
    std::from_chars(tail.data(), tail.data() + tail.size(), dc);
    CHECK(dc == table.rows[row].degree_centrality);  // exact round-trip
    ++row;
  }
  CHECK(row == table.rows.size());
}
