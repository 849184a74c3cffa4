#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coordnet/ingest.hpp"

namespace coordnet {

struct DistributionEntry {
  std::string key;
  std::uint64_t count = 0;
  double percent = 0.0;  // of records carrying the dimension
};

// Count-descending (key-ascending on ties) frequency table. `total` counts
// all records, `with_value` the ones carrying the dimension; entries may be
// truncated to a caller's k while the totals still cover everything.
struct DistributionReport {
  std::string dimension;
  std::vector<DistributionEntry> entries;
  std::uint64_t total = 0;
  std::uint64_t with_value = 0;
};

enum class TimeBucket { kDay, kWeek, kMonth };

struct HistogramBucket {
  CivilDate bucket_start;
  std::uint64_t count = 0;
};

// Post counts per calendar bucket; empty buckets between the first and last
// post are included. Weeks start on Monday.
std::vector<HistogramBucket> time_histogram(const Dataset& dataset, TimeBucket bucket);

DistributionReport top_actors(const Dataset& dataset, std::size_t k);
DistributionReport post_type_distribution(const Dataset& dataset);
DistributionReport admin_country_distribution(const Dataset& dataset);
// Branded-content sponsor counts, keyed on sponsor name.
DistributionReport sponsor_distribution(const Dataset& dataset, std::size_t k);

enum class TextField { kMessage, kImageText, kTitle, kPageDescription };

struct WordFrequencyOptions {
  std::vector<TextField> fields = {TextField::kMessage};
  std::set<std::string> stopwords;  // empty: ship the default en+hi lists
  bool use_default_stopwords = true;
  std::size_t k = 50;
  bool bigrams = false;
};

DistributionReport word_frequency(const Dataset& dataset, const WordFrequencyOptions& options);

// Unicode-aware word splitting: tokens are maximal runs of letter (and
// combining-mark) codepoints, Latin folded to lowercase, Devanagari and
// other scripts preserved. Tokens shorter than two codepoints are dropped.
std::vector<std::string> tokenize_words(std::string_view text);

const std::set<std::string>& default_stopwords();
std::set<std::string> load_stopwords_file(const std::string& path);

struct CrossTabRow {
  std::string link;
  std::uint64_t link_count = 0;  // number of sharing records
  std::vector<std::pair<std::string, std::uint64_t>> category_counts;  // distinct pages
};

struct LinkCategoryCrossTab {
  std::vector<CrossTabRow> rows;  // link_count descending
};

LinkCategoryCrossTab top_links_crosstab(const Dataset& dataset, std::size_t k);

// Ranked (url, count) list feeding the link-liveness audit.
std::vector<std::pair<std::string, std::uint64_t>> top_links(const Dataset& dataset, std::size_t k);

}  // namespace coordnet
