#include "coordnet/stats.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "coordnet/error.hpp"
#include "coordnet/utf8.hpp"

namespace coordnet {

namespace {

DistributionReport finalize_report(std::string dimension,
                                   std::map<std::string, std::uint64_t> counts,
                                   std::uint64_t total, std::uint64_t with_value, std::size_t k) {
  DistributionReport report;
  report.dimension = std::move(dimension);
  report.total = total;
  report.with_value = with_value;
  report.entries.reserve(counts.size());
  for (auto& [key, count] : counts)
    report.entries.push_back(DistributionEntry{key, count, 0.0});
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const DistributionEntry& a, const DistributionEntry& b) {
                     if (a.count != b.count) return a.count > b.count;
                     return a.key < b.key;
                   });
  for (auto& e : report.entries)
    e.percent = with_value ? 100.0 * static_cast<double>(e.count) / static_cast<double>(with_value)
                           : 0.0;
  if (k && report.entries.size() > k) report.entries.resize(k);
  return report;
}

std::int64_t bucket_start_days(std::int64_t days, TimeBucket bucket) {
  switch (bucket) {
    case TimeBucket::kDay:
      return days;
    case TimeBucket::kWeek: {
      std::int64_t weekday_mon0 = ((days + 3) % 7 + 7) % 7;  // 1970-01-01 is a Thursday
      return days - weekday_mon0;
    }
    case TimeBucket::kMonth: {
      CivilDate d = civil_from_days(days);
      return days_from_civil(CivilDate{d.year, d.month, 1});
    }
  }
  return days;
}

std::int64_t next_bucket(std::int64_t start, TimeBucket bucket) {
  switch (bucket) {
    case TimeBucket::kDay:
      return start + 1;
    case TimeBucket::kWeek:
      return start + 7;
    case TimeBucket::kMonth: {
      CivilDate d = civil_from_days(start);
      if (++d.month > 12) {
        d.month = 1;
        ++d.year;
      }
      return days_from_civil(d);
    }
  }
  return start + 1;
}

}  // namespace

std::vector<HistogramBucket> time_histogram(const Dataset& dataset, TimeBucket bucket) {
  std::vector<HistogramBucket> out;
  if (dataset.records.empty()) return out;

  std::unordered_map<std::int64_t, std::uint64_t> counts;
  std::int64_t min_day = 0, max_day = 0;
  bool first = true;
  for (const auto& rec : dataset.records) {
    std::int64_t days = days_from_civil(rec.post_created_date);
    if (first || days < min_day) min_day = days;
    if (first || days > max_day) max_day = days;
    first = false;
    ++counts[bucket_start_days(days, bucket)];
  }

  for (std::int64_t b = bucket_start_days(min_day, bucket); b <= max_day; b = next_bucket(b, bucket)) {
    auto it = counts.find(b);
    out.push_back(HistogramBucket{civil_from_days(b), it == counts.end() ? 0 : it->second});
  }
  return out;
}

DistributionReport top_actors(const Dataset& dataset, std::size_t k) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& rec : dataset.records) ++counts[rec.account_name];
  return finalize_report("actor", std::move(counts), dataset.records.size(),
                         dataset.records.size(), k);
}

DistributionReport post_type_distribution(const Dataset& dataset) {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t with_value = 0;
  for (const auto& rec : dataset.records) {
    if (rec.post_type.empty()) {
      ++counts["(unknown)"];
    } else {
      ++counts[rec.post_type];
      ++with_value;
    }
  }
  return finalize_report("post_type", std::move(counts), dataset.records.size(), with_value, 0);
}

DistributionReport admin_country_distribution(const Dataset& dataset) {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t with_value = 0;
  for (const auto& rec : dataset.records) {
    if (rec.page_admin_top_country && !rec.page_admin_top_country->empty()) {
      ++counts[*rec.page_admin_top_country];
      ++with_value;
    } else {
      ++counts["(unknown)"];
    }
  }
  return finalize_report("admin_country", std::move(counts), dataset.records.size(), with_value, 0);
}

DistributionReport sponsor_distribution(const Dataset& dataset, std::size_t k) {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t with_value = 0;
  for (const auto& rec : dataset.records) {
    if (rec.branded_sponsor && rec.branded_sponsor->name && !rec.branded_sponsor->name->empty()) {
      ++counts[*rec.branded_sponsor->name];
      ++with_value;
    }
  }
  return finalize_report("sponsor", std::move(counts), dataset.records.size(), with_value, k);
}

namespace {

// Word codepoints: letters plus the combining marks scripts like Devanagari
// need to spell a word. Digits and danda/punctuation split tokens.
constexpr std::pair<char32_t, char32_t> kWordRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A},  // ASCII letters
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x00FF},  // Latin-1
    {0x0100, 0x024F},  // Latin extended A/B
    {0x0370, 0x03FF},  // Greek
    {0x0400, 0x04FF},  // Cyrillic
    {0x0531, 0x058F},  // Armenian
    {0x05B0, 0x05F4},  // Hebrew
    {0x0600, 0x061A}, {0x0620, 0x065F}, {0x0660, 0x06FF},  // Arabic
    {0x0900, 0x0963}, {0x0971, 0x097F},  // Devanagari (danda + digits excluded)
    {0x0980, 0x09E3}, {0x09F0, 0x09FB},  // Bengali
    {0x0A01, 0x0A65}, {0x0A70, 0x0A7F},  // Gurmukhi
    {0x0A81, 0x0AE5}, {0x0AF0, 0x0AFF},  // Gujarati
    {0x0B01, 0x0B65}, {0x0B70, 0x0B7F},  // Oriya
    {0x0B82, 0x0BE5},  // Tamil
    {0x0C00, 0x0C65}, {0x0C80, 0x0CE5},  // Telugu, Kannada
    {0x0D00, 0x0D65}, {0x0D7A, 0x0D7F},  // Malayalam
    {0x0E01, 0x0E4F},  // Thai
    {0x3040, 0x30FF},  // kana
    {0x4E00, 0x9FFF},  // CJK unified
    {0xAC00, 0xD7A3},  // Hangul
};

bool is_word_codepoint(char32_t cp) {
  for (const auto& [lo, hi] : kWordRanges) {
    if (cp < lo) return false;
    if (cp <= hi) return true;
  }
  return false;
}

char32_t fold_latin(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  return cp;
}

}  // namespace

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t current_cps = 0;
  std::size_t i = 0;
  auto flush = [&] {
    if (current_cps >= 2) tokens.push_back(current);
    current.clear();
    current_cps = 0;
  };
  while (i < text.size()) {
    char32_t cp = utf8::decode(text, i);
    if (is_word_codepoint(cp)) {
      utf8::append(current, fold_latin(cp));
      ++current_cps;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

DistributionReport word_frequency(const Dataset& dataset, const WordFrequencyOptions& options) {
  const std::set<std::string>& stopwords =
      options.use_default_stopwords && options.stopwords.empty() ? default_stopwords()
                                                                 : options.stopwords;

  std::map<std::string, std::uint64_t> counts;
  std::uint64_t token_total = 0;
  auto consume = [&](const std::optional<std::string>& text) {
    if (!text) return;
    std::vector<std::string> tokens = tokenize_words(*text);
    std::vector<const std::string*> kept;
    for (const auto& t : tokens)
      if (!stopwords.count(t)) kept.push_back(&t);
    if (options.bigrams) {
      for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
        ++counts[*kept[i] + " " + *kept[i + 1]];
        ++token_total;
      }
    } else {
      for (const std::string* t : kept) {
        ++counts[*t];
        ++token_total;
      }
    }
  };

  for (const auto& rec : dataset.records) {
    for (TextField field : options.fields) {
      switch (field) {
        case TextField::kMessage:
          consume(rec.message);
          break;
        case TextField::kImageText:
          consume(rec.image_text);
          break;
        case TextField::kTitle:
          consume(rec.title);
          break;
        case TextField::kPageDescription:
          consume(rec.page_description);
          break;
      }
    }
  }
  return finalize_report("word", std::move(counts), token_total, token_total, options.k);
}

std::set<std::string> load_stopwords_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open stopword file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    words.insert(line.substr(b));
  }
  return words;
}

LinkCategoryCrossTab top_links_crosstab(const Dataset& dataset, std::size_t k) {
  struct LinkAgg {
    std::uint64_t count = 0;
    // category -> distinct sharing pages
    std::map<std::string, std::unordered_set<std::string>> pages_by_category;
  };
  std::unordered_map<std::string, LinkAgg> agg;
  for (const auto& rec : dataset.records) {
    if (!rec.link_original || rec.link_original->empty()) continue;
    LinkAgg& a = agg[*rec.link_original];
    ++a.count;
    if (rec.page_category && !rec.page_category->empty())
      a.pages_by_category[*rec.page_category].insert(rec.account_name);
  }

  std::vector<const std::pair<const std::string, LinkAgg>*> order;
  order.reserve(agg.size());
  for (const auto& kv : agg) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->second.count != b->second.count) return a->second.count > b->second.count;
    return a->first < b->first;
  });
  if (order.size() > k) order.resize(k);

  LinkCategoryCrossTab tab;
  tab.rows.reserve(order.size());
  for (const auto* kv : order) {
    CrossTabRow row;
    row.link = kv->first;
    row.link_count = kv->second.count;
    for (const auto& [category, pages] : kv->second.pages_by_category)
      row.category_counts.emplace_back(category, pages.size());
    std::sort(row.category_counts.begin(), row.category_counts.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

std::vector<std::pair<std::string, std::uint64_t>> top_links(const Dataset& dataset, std::size_t k) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& rec : dataset.records)
    if (rec.link_original && !rec.link_original->empty()) ++counts[*rec.link_original];

  std::vector<std::pair<std::string, std::uint64_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace coordnet
