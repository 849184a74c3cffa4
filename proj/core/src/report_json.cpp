#include "coordnet/report_json.hpp"

#include <nlohmann/json.hpp>

#include "coordnet/csv.hpp"

namespace coordnet {

namespace {

using Json = nlohmann::ordered_json;

Json distribution_to_json(const DistributionReport& report) {
  Json j;
  j["dimension"] = report.dimension;
  j["total"] = report.total;
  j["with_value"] = report.with_value;
  j["entries"] = Json::array();
  for (const auto& e : report.entries)
    j["entries"].push_back(Json{{"key", e.key}, {"count", e.count}, {"percent", e.percent}});
  return j;
}

}  // namespace

std::string stats_json(const Dataset& dataset, const StatsRequest& request) {
  Json j;
  j["records"] = dataset.records.size();
  Json reports = Json::object();

  if (request.time) {
    Json hist = Json::array();
    const char* bucket_name = request.bucket == TimeBucket::kDay   ? "day"
                              : request.bucket == TimeBucket::kWeek ? "week"
                                                                     : "month";
    for (const auto& b : time_histogram(dataset, request.bucket))
      hist.push_back(Json{{"bucket_start", format_date(b.bucket_start)}, {"count", b.count}});
    reports["time"] = Json{{"bucket", bucket_name}, {"histogram", std::move(hist)}};
  }
  if (request.actors) reports["actors"] = distribution_to_json(top_actors(dataset, request.k));
  if (request.types) reports["types"] = distribution_to_json(post_type_distribution(dataset));
  if (request.countries)
    reports["countries"] = distribution_to_json(admin_country_distribution(dataset));
  if (request.words) {
    WordFrequencyOptions wf = request.word_options;
    wf.k = request.k;
    reports["words"] = distribution_to_json(word_frequency(dataset, wf));
  }
  if (request.links) {
    LinkCategoryCrossTab tab = top_links_crosstab(dataset, request.k);
    Json rows = Json::array();
    for (const auto& row : tab.rows) {
      Json categories = Json::array();
      for (const auto& [category, count] : row.category_counts)
        categories.push_back(Json{{"page_category", category}, {"count", count}});
      rows.push_back(Json{{"link", row.link},
                          {"link_count", row.link_count},
                          {"category_counts", std::move(categories)}});
    }
    reports["links"] = std::move(rows);
  }
  if (request.sponsors)
    reports["sponsors"] = distribution_to_json(sponsor_distribution(dataset, request.k));

  j["reports"] = std::move(reports);
  return j.dump(2) + "\n";
}

std::string centrality_table_json(const CentralityTable& table, std::size_t top) {
  const CentralityRow* begin = table.rows.data();
  std::vector<CentralityRow> ranked;
  std::size_t count = table.rows.size();
  if (top > 0 && top < table.rows.size()) {
    CentralityColumn column = table.has_degree      ? CentralityColumn::kDegreeCentrality
                              : table.has_closeness ? CentralityColumn::kCloseness
                                                    : CentralityColumn::kBetweenness;
    ranked = top_k(table, column, top);
    begin = ranked.data();
    count = ranked.size();
  }

  Json rows = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const CentralityRow& row = begin[i];
    Json r;
    r["label"] = row.label;
    r["kind"] = to_string(row.kind);
    r["degree"] = row.degree;
    r["degree_centrality"] = table.has_degree ? Json(row.degree_centrality) : Json(nullptr);
    r["closeness_raw"] =
        table.has_closeness && row.closeness_raw ? Json(*row.closeness_raw) : Json(nullptr);
    r["closeness_normalized"] = table.has_closeness && row.closeness_normalized
                                    ? Json(*row.closeness_normalized)
                                    : Json(nullptr);
    r["betweenness_raw"] =
        table.has_betweenness && row.betweenness_raw ? Json(*row.betweenness_raw) : Json(nullptr);
    r["betweenness_normalized"] = table.has_betweenness && row.betweenness_normalized
                                      ? Json(*row.betweenness_normalized)
                                      : Json(nullptr);
    rows.push_back(std::move(r));
  }
  return rows.dump(2) + "\n";
}

std::string components_json(const std::vector<ComponentSummary>& summaries) {
  Json arr = Json::array();
  for (const auto& s : summaries) {
    Json j;
    j["rank"] = s.order_rank;
    j["nodes"] = s.node_count;
    j["edges"] = s.edge_count;
    j["avg_distance"] = s.avg_distance;
    j["avg_distance_mode"] = Json{{"sampled", s.avg_distance_mode.sampled},
                                  {"sources", s.avg_distance_mode.sources},
                                  {"seed", s.avg_distance_mode.seed}};
    Json central;
    central["label"] = s.max_central.label;
    central["degree_centrality"] = s.max_central.degree_centrality;
    central["closeness"] = s.max_central.closeness ? Json(*s.max_central.closeness) : Json(nullptr);
    central["betweenness"] = s.max_central.betweenness;
    j["max_central"] = std::move(central);
    j["maxima_agree"] = s.maxima_agree;
    j["betweenness_sampled"] = s.betweenness_sampled;
    j["closeness_estimated"] = s.closeness_estimated;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string communities_json(const CommunityPartition& partition,
                             const std::vector<CommunityReportEntry>& summary,
                             const ActorLinkGraph& graph) {
  Json j;
  j["scope"] = partition.scope == CommunityScope::kLargestComponent ? "largest_component"
                                                                    : "whole_graph";
  j["target_k"] = partition.target_k;
  j["target_reached"] = partition.target_reached;
  j["mode"] = partition.fast_mode
                  ? Json{{"kind", "sampled"}, {"pivots", partition.fast_pivots},
                         {"seed", partition.fast_seed}}
                  : Json{{"kind", "exact"}};
  j["modularity"] = partition.modularity;

  Json communities = Json::array();
  for (std::size_t c = 0; c < partition.communities.size(); ++c) {
    Json entry;
    entry["id"] = c;
    entry["size"] = partition.communities[c].size();
    const auto& lead = partition.lead_actor_per_community[c];
    entry["lead_actor"] =
        lead ? Json{{"label", lead->label}, {"degree", lead->degree}} : Json(nullptr);
    if (c < summary.size()) {
      entry["internal_edges"] = summary[c].internal_edges;
      Json actors = Json::array();
      for (const auto& [label, degree] : summary[c].top_actors)
        actors.push_back(Json{{"label", label}, {"degree", degree}});
      entry["top_actors"] = std::move(actors);
      Json links = Json::array();
      for (const auto& [label, degree] : summary[c].top_links)
        links.push_back(Json{{"label", label}, {"degree", degree}});
      entry["top_links"] = std::move(links);
    }
    Json members = Json::array();
    for (NodeId v : partition.communities[c])
      members.push_back(Json{{"kind", to_string(graph.kind(v))}, {"label", graph.label(v)}});
    entry["members"] = std::move(members);
    communities.push_back(std::move(entry));
  }
  j["communities"] = std::move(communities);

  Json log = Json::array();
  for (const auto& entry : partition.removal_log) {
    log.push_back(Json{{"source", entry.label_u},
                       {"target", entry.label_v},
                       {"edge_betweenness", entry.edge_betweenness},
                       {"components_after", entry.components_after}});
  }
  j["removal_log"] = std::move(log);
  return j.dump(2) + "\n";
}

std::string liveness_json(const LivenessReport& report) {
  Json j;
  j["checked"] = report.checked;
  j["broken"] = report.broken;
  j["broken_fraction"] = report.broken_fraction;
  j["policy"] = Json{{"timeout_ms", report.policy.timeout_ms},
                     {"max_redirects", report.policy.max_redirects},
                     {"head_then_get", report.policy.head_then_get},
                     {"concurrency_limit", report.policy.concurrency_limit},
                     {"per_host_delay_ms", report.policy.per_host_delay_ms}};
  Json statuses = Json::array();
  for (const auto& s : report.statuses) {
    Json row;
    row["url"] = s.url;
    row["outcome"] = to_string(s.outcome);
    row["broken"] = s.broken();
    row["http_status"] = s.http_status ? Json(*s.http_status) : Json(nullptr);
    row["checked_at"] = s.checked_at;
    row["elapsed_ms"] = s.elapsed_ms;
    if (!s.detail.empty()) row["detail"] = s.detail;
    statuses.push_back(std::move(row));
  }
  j["statuses"] = std::move(statuses);
  return j.dump(2) + "\n";
}

void distribution_csv(const DistributionReport& report, std::ostream& out) {
  out << "key,count\n";
  for (const auto& e : report.entries) out << csv::escape(e.key) << ',' << e.count << '\n';
}

}  // namespace coordnet
