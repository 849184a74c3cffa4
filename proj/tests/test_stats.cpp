#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "coordnet/graph.hpp"
#include "coordnet/ingest.hpp"
#include "coordnet/stats.hpp"
#include "support/fixtures.hpp"

using namespace coordnet;
using testsupport::base_row;
using testsupport::csv_header_row;
using testsupport::csv_row;

namespace {

Dataset parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

struct RowSpec {
  std::string actor;
  std::string date;
  std::string type;
  std::string country;   // may be empty
  std::string link;      // may be empty
  std::string category;  // may be empty
};

Dataset dataset_from_specs(const std::vector<RowSpec>& specs) {
  std::string text = csv_header_row();
  for (const auto& s : specs) {
    auto row = base_row(s.actor, s.date, "12:00:00");
    row["type"] = s.type;
    if (!s.country.empty()) row["Page Admin Top Country"] = s.country;
    if (!s.link.empty()) row["expandedLinks.original"] = s.link;
    if (!s.category.empty()) row["Page Category"] = s.category;
    text += csv_row(row);
  }
  return parse_text(text);
}

}  // namespace

TEST_CASE("single-day histogram is a single bar") {
  Dataset ds = dataset_from_specs({{"X", "2020-05-05", "Photo", "", "", ""},
                                   {"X", "2020-05-05", "Photo", "", "", ""},
                                   {"Y", "2020-05-05", "Photo", "", "", ""}});
  auto hist = time_histogram(ds, TimeBucket::kDay);
  REQUIRE(hist.size() == 1);
  CHECK(hist[0].count == 3);
  CHECK(hist[0].bucket_start == CivilDate{2020, 5, 5});
}

TEST_CASE("gaps between days are zero-filled") {
  Dataset ds = dataset_from_specs({{"X", "2015-01-01", "Photo", "", "", ""},
                                   {"Y", "2015-01-03", "Photo", "", "", ""}});
  auto hist = time_histogram(ds, TimeBucket::kDay);
  REQUIRE(hist.size() == 3);
  CHECK(hist[0].count == 1);
  CHECK(hist[1].count == 0);
  CHECK(hist[2].count == 1);
}

TEST_CASE("month buckets cross year boundaries") {
  Dataset ds = dataset_from_specs({{"X", "2014-12-31", "Photo", "", "", ""},
                                   {"Y", "2015-02-01", "Photo", "", "", ""}});
  auto hist = time_histogram(ds, TimeBucket::kMonth);
  REQUIRE(hist.size() == 3);
  CHECK(hist[0].bucket_start == CivilDate{2014, 12, 1});
  CHECK(hist[1].bucket_start == CivilDate{2015, 1, 1});
  CHECK(hist[1].count == 0);
  CHECK(hist[2].bucket_start == CivilDate{2015, 2, 1});
}

TEST_CASE("week buckets start on monday") {
  // 2020-01-01 was a Wednesday; its week starts 2019-12-30
  Dataset ds = dataset_from_specs({{"X", "2020-01-01", "Photo", "", "", ""}});
  auto hist = time_histogram(ds, TimeBucket::kWeek);
  REQUIRE(hist.size() == 1);
  CHECK(hist[0].bucket_start == CivilDate{2019, 12, 30});
}

TEST_CASE("top actors carry share-of-posts percentages") {
  Dataset ds = dataset_from_specs({{"X", "2020-01-01", "Photo", "", "", ""},
                                   {"X", "2020-01-01", "Photo", "", "", ""},
                                   {"X", "2020-01-01", "Photo", "", "", ""},
                                   {"Y", "2020-01-01", "Photo", "", "", ""}});
  DistributionReport report = top_actors(ds, 2);
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].key == "X");
  CHECK(report.entries[0].percent == doctest::Approx(75.0));
  CHECK(report.entries[1].percent == doctest::Approx(25.0));
}

TEST_CASE("post type distribution with passthrough types") {
  Dataset ds = dataset_from_specs({{"A", "2020-01-01", "Photo", "", "", ""},
                                   {"B", "2020-01-01", "Photo", "", "", ""},
                                   {"C", "2020-01-01", "Link", "", "", ""},
                                   {"D", "2020-01-01", "Link", "", "", ""},
                                   {"E", "2020-01-01", "event", "", "", ""}});
  DistributionReport report = post_type_distribution(ds);
  std::map<std::string, std::uint64_t> counts;
  for (const auto& e : report.entries) counts[e.key] = e.count;
  CHECK(counts["photo"] == 2);
  CHECK(counts["link"] == 2);
  CHECK(counts["event"] == 1);  // verbatim passthrough

  std::uint64_t total = 0;
  for (const auto& e : report.entries) total += e.count;
  CHECK(total == report.total);
}

TEST_CASE("admin country distribution buckets missing values") {
  std::vector<RowSpec> specs;
  for (int i = 0; i < 9; ++i) specs.push_back({"A", "2020-01-01", "Photo", "IN", "", ""});
  specs.push_back({"B", "2020-01-01", "Photo", "SA", "", ""});
  specs.push_back({"C", "2020-01-01", "Photo", "", "", ""});
  DistributionReport report = admin_country_distribution(dataset_from_specs(specs));
  CHECK(report.entries[0].key == "IN");
  CHECK(report.entries[0].percent == doctest::Approx(90.0));
  bool has_unknown = false;
  for (const auto& e : report.entries)
    if (e.key == "(unknown)") has_unknown = (e.count == 1);
  CHECK(has_unknown);
}

TEST_CASE("word tokenizer folds latin and keeps devanagari") {
  auto tokens = tokenize_words("Jay Shree Ram Jay");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0] == "jay");
  CHECK(tokens[1] == "shree");

  tokens = tokenize_words("जय श्री राम! Jai-Hind");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0] == "जय");
  CHECK(tokens[1] == "श्री");
  CHECK(tokens[2] == "राम");
  CHECK(tokens[3] == "jai");
  CHECK(tokens[4] == "hind");

  // single-codepoint tokens are dropped, danda splits words
  tokens = tokenize_words("a क। नमस्ते b c7d");
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0] == "नमस्ते");
}

TEST_CASE("word frequency counts per message") {
  std::vector<RowSpec> specs = {{"A", "2020-01-01", "Photo", "", "", ""}};
  std::string text = csv_header_row();
  auto row = base_row("A", "2020-01-01", "10:00:00");
  row["message"] = "Jay Shree Ram Jay";
  text += csv_row(row);
  Dataset ds = parse_text(text);

  WordFrequencyOptions options;
  options.use_default_stopwords = false;
  DistributionReport report = word_frequency(ds, options);
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[0].key == "jay");
  CHECK(report.entries[0].count == 2);
}

TEST_CASE("stopwords drop matching tokens entirely") {
  std::string text = csv_header_row();
  auto row = base_row("A", "2020-01-01", "10:00:00");
  row["message"] = "the quick the brown the fox";
  text += csv_row(row);
  Dataset ds = parse_text(text);

  WordFrequencyOptions options;
  options.stopwords = {"the"};
  options.use_default_stopwords = false;
  DistributionReport report = word_frequency(ds, options);
  for (const auto& e : report.entries) CHECK(e.key != "the");
  CHECK(report.entries.size() == 3);
}

TEST_CASE("mixed-language fixture matches a hand tokenization") {
  // 20 messages, counted by hand below
  std::vector<std::string> messages = {
      "Jay Shree Ram",       "jay shree ram",     "जय श्री राम",      "जय श्री राम",
      "Bajrang Dal zindabad", "Bajrang Dal",      "Jai Hind",         "jai hind",
      "Kattar Hindustani",    "Kattar Hindustani", "नमस्ते दुनिया",   "नमस्ते",
      "hello world",          "hello World",       "WORLD hello",     "राम राम",
      "jay jay jay",          "शुभ प्रभात",        "शुभ रात्रि",      "Jai Shree Ram",
  };
  std::string text = csv_header_row();
  for (std::size_t i = 0; i < messages.size(); ++i) {
    auto row = base_row("A" + std::to_string(i), "2020-01-01", "10:00:00");
    row["message"] = messages[i];
    text += csv_row(row);
  }
  Dataset ds = parse_text(text);
  WordFrequencyOptions options;
  options.use_default_stopwords = false;
  options.k = 100;
  DistributionReport report = word_frequency(ds, options);
  std::map<std::string, std::uint64_t> counts;
  for (const auto& e : report.entries) counts[e.key] = e.count;

  CHECK(counts["jay"] == 5);      // two "jay shree ram" variants + "jay jay jay"
  CHECK(counts["shree"] == 3);
  CHECK(counts["ram"] == 3);
  CHECK(counts["जय"] == 2);
  CHECK(counts["राम"] == 4);      // 2 + twice in "राम राम"
  CHECK(counts["hello"] == 3);
  CHECK(counts["world"] == 3);
  CHECK(counts["jai"] == 3);
  CHECK(counts["hind"] == 2);
  CHECK(counts["नमस्ते"] == 2);
  CHECK(counts["शुभ"] == 2);
  CHECK(counts["bajrang"] == 2);
  CHECK(counts["dal"] == 2);
  CHECK(counts["kattar"] == 2);
  CHECK(counts["hindustani"] == 2);
}

TEST_CASE("word keys re-tokenize to themselves") {
  std::string text = csv_header_row();
  auto row = base_row("A", "2020-01-01", "10:00:00");
  row["message"] = "Mixed Case नमस्ते Words, punctuation! और बहुत कुछ";
  text += csv_row(row);
  WordFrequencyOptions options;
  options.use_default_stopwords = false;
  DistributionReport report = word_frequency(parse_text(text), options);
  for (const auto& e : report.entries) {
    auto again = tokenize_words(e.key);
    REQUIRE(again.size() == 1);
    CHECK(again[0] == e.key);
  }
}

TEST_CASE("bigram mode pairs adjacent kept tokens") {
  std::string text = csv_header_row();
  auto row = base_row("A", "2020-01-01", "10:00:00");
  row["message"] = "jay shree ram";
  text += csv_row(row);
  WordFrequencyOptions options;
  options.use_default_stopwords = false;
  options.bigrams = true;
  DistributionReport report = word_frequency(parse_text(text), options);
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].key == "jay shree");
  CHECK(report.entries[1].key == "shree ram");
}

TEST_CASE("crosstab counts distinct sharing pages per category") {
  std::vector<RowSpec> specs = {
      {"News One", "2020-01-01", "Link", "", "http://l/", "NEWS_SITE"},
      {"News Two", "2020-01-01", "Link", "", "http://l/", "NEWS_SITE"},
      {"Community", "2020-01-01", "Link", "", "http://l/", "COMMUNITY"},
  };
  LinkCategoryCrossTab tab = top_links_crosstab(dataset_from_specs(specs), 10);
  REQUIRE(tab.rows.size() == 1);
  CHECK(tab.rows[0].link == "http://l/");
  CHECK(tab.rows[0].link_count == 3);
  REQUIRE(tab.rows[0].category_counts.size() == 2);
  CHECK(tab.rows[0].category_counts[0] == std::pair<std::string, std::uint64_t>{"NEWS_SITE", 2});
  CHECK(tab.rows[0].category_counts[1] == std::pair<std::string, std::uint64_t>{"COMMUNITY", 1});
}

TEST_CASE("a page sharing twice counts once per category") {
  std::vector<RowSpec> specs = {
      {"Same Page", "2020-01-01", "Link", "", "http://l/", "NEWS_SITE"},
      {"Same Page", "2020-01-02", "Link", "", "http://l/", "NEWS_SITE"},
  };
  LinkCategoryCrossTab tab = top_links_crosstab(dataset_from_specs(specs), 10);
  REQUIRE(tab.rows.size() == 1);
  CHECK(tab.rows[0].link_count == 2);
  CHECK(tab.rows[0].category_counts[0].second == 1);
}

TEST_CASE("crosstab agrees with a group-by oracle on a seeded fixture") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> actor(0, 25), link(0, 12), category(0, 4);
  const char* categories[] = {"NEWS_SITE", "COMMUNITY", "POLITICIAN", "ART", ""};
  std::vector<RowSpec> specs;
  for (int i = 0; i < 500; ++i) {
    specs.push_back({"actor" + std::to_string(actor(rng)), "2020-01-01", "Link", "",
                     "http://link" + std::to_string(link(rng)) + "/",
                     categories[category(rng)]});
  }
  // independent group-by
  std::map<std::string, std::uint64_t> link_counts;
  std::map<std::string, std::map<std::string, std::set<std::string>>> pages;
  for (const auto& s : specs) {
    ++link_counts[s.link];
    if (!s.category.empty()) pages[s.link][s.category].insert(s.actor);
  }

  LinkCategoryCrossTab tab = top_links_crosstab(dataset_from_specs(specs), 1000);
  REQUIRE(tab.rows.size() == link_counts.size());
  for (const auto& row : tab.rows) {
    CHECK(row.link_count == link_counts.at(row.link));
    std::uint64_t category_total = 0;
    for (const auto& [category, count] : row.category_counts) {
      CHECK(count == pages[row.link][category].size());
      category_total += count;
    }
    CHECK(category_total <= row.link_count);
  }
  // descending link counts
  for (std::size_t i = 1; i < tab.rows.size(); ++i)
    CHECK(tab.rows[i - 1].link_count >= tab.rows[i].link_count);
}

TEST_CASE("crosstab link counts equal the link node's weighted degree") {
  std::vector<RowSpec> specs = {
      {"A", "2020-01-01", "Link", "", "http://x/", "NEWS_SITE"},
      {"A", "2020-01-02", "Link", "", "http://x/", "NEWS_SITE"},
      {"B", "2020-01-01", "Link", "", "http://x/", ""},
      {"B", "2020-01-01", "Link", "", "http://y/", ""},
  };
  Dataset ds = dataset_from_specs(specs);
  ActorLinkGraph g = build_graph(ds);
  LinkCategoryCrossTab tab = top_links_crosstab(ds, 10);
  for (const auto& row : tab.rows) {
    NodeId link = *g.find(NodeKind::kLink, row.link);
    std::int64_t weighted_degree = 0;
    for (const auto& e : g.edges())
      if (e.u == link || e.v == link) weighted_degree += e.weight;
    CHECK(row.link_count == static_cast<std::uint64_t>(weighted_degree));
  }
}

TEST_CASE("group-by oracle over a seeded thousand-row fixture") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> actor(0, 19), type(0, 3), country(0, 3), day(1, 28);
  const char* types[] = {"Photo", "Link", "Status", "Native Video"};
  const char* countries[] = {"IN", "SA", "AU", ""};
  std::vector<RowSpec> specs;
  for (int i = 0; i < 1000; ++i) {
    char date[16];
    std::snprintf(date, sizeof(date), "2021-%02d-%02d", 1 + i % 12, day(rng));
    specs.push_back({"actor" + std::to_string(actor(rng)), date, types[type(rng)],
                     countries[country(rng)], "", ""});
  }
  Dataset ds = dataset_from_specs(specs);

  std::map<std::string, std::uint64_t> actor_expected, type_expected, country_expected,
      month_expected;
  auto canonical_type = [](std::string t) {
    for (char& c : t) {
      if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
      if (c == ' ') c = '_';
    }
    return t;
  };
  for (const auto& s : specs) {
    ++actor_expected[s.actor];
    ++type_expected[canonical_type(s.type)];
    ++country_expected[s.country.empty() ? "(unknown)" : s.country];
    ++month_expected[s.date.substr(0, 7)];
  }

  DistributionReport actors = top_actors(ds, 100);
  for (const auto& e : actors.entries) CHECK(e.count == actor_expected.at(e.key));
  DistributionReport types_report = post_type_distribution(ds);
  for (const auto& e : types_report.entries) CHECK(e.count == type_expected.at(e.key));
  DistributionReport countries_report = admin_country_distribution(ds);
  for (const auto& e : countries_report.entries) CHECK(e.count == country_expected.at(e.key));

  auto hist = time_histogram(ds, TimeBucket::kMonth);
  std::uint64_t hist_total = 0;
  for (const auto& bucket : hist) {
    char key[8];
    std::snprintf(key, sizeof(key), "%04d-%02d", bucket.bucket_start.year,
                  bucket.bucket_start.month);
    auto it = month_expected.find(key);
    CHECK(bucket.count == (it == month_expected.end() ? 0 : it->second));
    hist_total += bucket.count;
  }
  CHECK(hist_total == 1000);
}

TEST_CASE("sponsor distribution keys on sponsor names") {
  std::string text = csv_header_row();
  for (int i = 0; i < 3; ++i) {
    auto row = base_row("A", "2020-01-01", "10:00:00");
    row["brandedContentSponsor.name"] = i < 2 ? "BrandX" : "BrandY";
    text += csv_row(row);
  }
  text += csv_row(base_row("B", "2020-01-01", "10:00:00"));
  DistributionReport report = sponsor_distribution(parse_text(text), 10);
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].key == "BrandX");
  CHECK(report.entries[0].count == 2);
  CHECK(report.with_value == 3);
}

TEST_CASE("distribution invariants hold") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> actor(0, 30);
  std::vector<RowSpec> specs;
  for (int i = 0; i < 400; ++i)
    specs.push_back({"actor" + std::to_string(actor(rng)), "2020-01-01", "Photo", "", "", ""});
  DistributionReport report = top_actors(dataset_from_specs(specs), 1000);
  std::uint64_t total = 0;
  double percent_total = 0;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    total += report.entries[i].count;
    percent_total += report.entries[i].percent;
    if (i) {
      CHECK(report.entries[i - 1].count >= report.entries[i].count);
      if (report.entries[i - 1].count == report.entries[i].count)
        CHECK(report.entries[i - 1].key < report.entries[i].key);
    }
  }
  CHECK(total == report.total);
  CHECK(percent_total == doctest::Approx(100.0).epsilon(0.0005));
}
