#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "coordnet/communities.hpp"
#include "coordnet/components.hpp"
#include "coordnet/metrics.hpp"
#include "coordnet/stats.hpp"
#include "coordnet/urlcheck.hpp"

namespace coordnet {

// All artifact JSON rendering lives here so the CLI subcommands and the
// pipeline runner emit byte-identical documents.

struct StatsRequest {
  bool time = false;
  bool actors = false;
  bool types = false;
  bool countries = false;
  bool words = false;
  bool links = false;
  bool sponsors = false;
  std::size_t k = 50;
  TimeBucket bucket = TimeBucket::kMonth;
  WordFrequencyOptions word_options;
};

std::string stats_json(const Dataset& dataset, const StatsRequest& request);

// Rows as {label, kind, degree, degree_centrality, closeness_raw,
// closeness_normalized, betweenness_raw, betweenness_normalized}; top == 0
// emits every node, otherwise the k best by the strongest computed column.
std::string centrality_table_json(const CentralityTable& table, std::size_t top);

std::string components_json(const std::vector<ComponentSummary>& summaries);

std::string communities_json(const CommunityPartition& partition,
                             const std::vector<CommunityReportEntry>& summary,
                             const ActorLinkGraph& graph);

std::string liveness_json(const LivenessReport& report);

// Word-cloud style key/weight CSV for a distribution report.
void distribution_csv(const DistributionReport& report, std::ostream& out);

}  // namespace coordnet
