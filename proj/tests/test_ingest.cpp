#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "coordnet/error.hpp"
#include "coordnet/ingest.hpp"
#include "support/fixtures.hpp"

using namespace coordnet;
using testsupport::base_row;
using testsupport::csv_header_row;
using testsupport::csv_row;

namespace {

Dataset parse_text(const std::string& text, ParseOptions options = {}) {
  std::istringstream in(text);
  return parse_csv(in, options);
}

std::string full_fixture() {
  std::string text = csv_header_row();
  auto row1 = base_row("Alpha Page", "2020-01-01", "10:00:00");
  row1["account.handle"] = "alpha";
  row1["platformId"] = "100064860065551";
  row1["Page Category"] = "NEWS_SITE";
  row1["Page Admin Top Country"] = "IN";
  row1["Page Description"] = "a news page";
  row1["Page Created"] = "2015-02-10";
  row1["subscriberCount"] = "1200";
  row1["Followers at Posting"] = "1100";
  row1["date"] = "2020-01-01 10:00:00";
  row1["type"] = "Link";
  row1["totalInteraction"] = "15";
  row1["statistics.actual.likeCount"] = "7";
  row1["statistics.actual.commentCount"] = "3";
  row1["statistics.actual.shareCount"] = "2";
  row1["statistics.actual.loveCount"] = "1";
  row1["statistics.actual.wowCount"] = "0";
  row1["statistics.actual.hahaCount"] = "1";
  row1["statistics.actual.sadCount"] = "0";
  row1["statistics.actual.angryCount"] = "1";
  row1["statistics.actual.careCount"] = "0";
  row1["Video Share Status"] = "owned";
  row1["Is Video Owner?"] = "yes";
  row1["statistics.actual.videoPostViewCount"] = "10";
  row1["statistics.actual.videoTotalViewCount"] = "20";
  row1["statistics.actual.videoAllCrosspostsViewCount"] = "5";
  row1["Video Length"] = "00:01:30";
  row1["postUrl"] = "https://www.facebook.com/p/1";
  row1["message"] = "Jay Shree Ram";
  row1["expandedLinks.original"] = "https://news.example/a";
  row1["expandedLinks.expanded"] = "https://news.example/a?utm=1";
  row1["imageText"] = "poster text";
  row1["title"] = "Headline";
  row1["description"] = "desc";
  row1["brandedContentSponsor.platformId"] = "555";
  row1["brandedContentSponsor.name"] = "SponsorCo";
  row1["brandedContentSponsor.category"] = "BRAND";
  row1["score"] = "-1.25";
  text += csv_row(row1);

  auto row2 = base_row("  हिन्दू रक्षी दल  ", "2021-06-15", "23:59:59");
  row2["message"] = "नमस्ते, \"दुनिया\"";
  row2["type"] = "Native Video";
  row2["expandedLinks.original"] = "https://blog.example/x";
  text += csv_row(row2);

  auto row3 = base_row("Gamma", "2019-12-31", "00:00:00");
  row3["type"] = "event";
  text += csv_row(row3);
  return text;
}

}  // namespace

TEST_CASE("full fixture with all 40 headers parses cleanly") {
  Dataset ds = parse_text(full_fixture());
  CHECK(ds.report.rows_read == 3);
  CHECK(ds.report.rows_accepted == 3);
  CHECK(ds.report.rows_rejected == 0);
  REQUIRE(ds.records.size() == 3);

  const PostRecord& r = ds.records[0];
  CHECK(r.account_name == "Alpha Page");
  CHECK(r.platform_id == 100064860065551);
  CHECK(r.page_created == CivilDate{2015, 2, 10});
  CHECK(r.post_created_date == CivilDate{2020, 1, 1});
  CHECK(r.post_created_time == TimeOfDay{10, 0, 0});
  CHECK(r.post_type == "link");
  CHECK(r.reactions.like == 7);
  CHECK(r.reactions.care == 0);
  CHECK(r.is_video_owner == true);
  CHECK(r.video_views.crossposts == 5);
  CHECK(r.branded_sponsor.has_value());
  CHECK(r.branded_sponsor->platform_id == 555);
  CHECK(r.score == -1.25);
  CHECK(r.posted_at == "2020-01-01 10:00:00");

  // account names are trimmed, other text is verbatim
  CHECK(ds.records[1].account_name == "हिन्दू रक्षी दल");
  CHECK(ds.records[1].message == "नमस्ते, \"दुनिया\"");
  CHECK(ds.records[1].post_type == "native_video");
  // unknown type passes through verbatim
  CHECK(ds.records[2].post_type == "event");
}

TEST_CASE("empty account name is rejected with the dedicated reason") {
  std::string text = csv_header_row() + csv_row(base_row("   ", "2020-01-01", "10:00:00"));
  for (SchemaMode mode : {SchemaMode::kStrict, SchemaMode::kLenient}) {
    Dataset ds = parse_text(text, ParseOptions{mode, DateFormat::kIso});
    CHECK(ds.report.rows_rejected == 1);
    CHECK(ds.report.rejection_reasons.at("missing account_name") == 1);
  }
}

TEST_CASE("unparsable dates and times reject the row") {
  std::string text = csv_header_row() + csv_row(base_row("A", "2020-13-01", "10:00:00")) +
                     csv_row(base_row("B", "2020-01-01", "25:00:00")) +
                     csv_row(base_row("C", "not a date", "10:00:00"));
  Dataset ds = parse_text(text);
  CHECK(ds.report.rows_accepted == 0);
  CHECK(ds.report.rejection_reasons.at("bad post_created_date") == 2);
  CHECK(ds.report.rejection_reasons.at("bad post_created_time") == 1);
}

TEST_CASE("strict rejects malformed optional fields, lenient degrades them") {
  auto row = base_row("A", "2020-01-01", "10:00:00");
  row["subscriberCount"] = "not-a-number";
  std::string text = csv_header_row() + csv_row(row);

  Dataset strict = parse_text(text, ParseOptions{SchemaMode::kStrict, DateFormat::kIso});
  CHECK(strict.report.rows_rejected == 1);
  CHECK(strict.report.rejection_reasons.at("malformed subscriberCount") == 1);

  Dataset lenient = parse_text(text, ParseOptions{SchemaMode::kLenient, DateFormat::kIso});
  CHECK(lenient.report.rows_accepted == 1);
  CHECK_FALSE(lenient.records[0].subscriber_count.has_value());
}

TEST_CASE("negative counts are malformed") {
  auto row = base_row("A", "2020-01-01", "10:00:00");
  row["statistics.actual.likeCount"] = "-3";
  std::string text = csv_header_row() + csv_row(row);
  Dataset strict = parse_text(text);
  CHECK(strict.report.rejection_reasons.count("malformed statistics.actual.likeCount") == 1);
  Dataset lenient = parse_text(text, ParseOptions{SchemaMode::kLenient, DateFormat::kIso});
  REQUIRE(lenient.records.size() == 1);
  CHECK_FALSE(lenient.records[0].reactions.like.has_value());
}

TEST_CASE("rejection is monotone from lenient to strict") {
  std::vector<std::map<std::string, std::string>> rows;
  rows.push_back(base_row("", "2020-01-01", "10:00:00"));
  rows.push_back(base_row("A", "garbage", "10:00:00"));
  rows.push_back(base_row("B", "2020-01-01", "junk"));
  auto bad_count = base_row("C", "2020-01-01", "10:00:00");
  bad_count["subscriberCount"] = "x";
  rows.push_back(bad_count);
  auto bad_bool = base_row("D", "2020-01-01", "10:00:00");
  bad_bool["Is Video Owner?"] = "maybe";
  rows.push_back(bad_bool);
  rows.push_back(base_row("E", "2020-01-01", "10:00:00"));

  for (const auto& row : rows) {
    std::string text = csv_header_row() + csv_row(row);
    bool lenient_rejects = parse_text(text, {SchemaMode::kLenient, DateFormat::kIso}).report.rows_rejected > 0;
    bool strict_rejects = parse_text(text, {SchemaMode::kStrict, DateFormat::kIso}).report.rows_rejected > 0;
    if (lenient_rejects) CHECK(strict_rejects);
  }
}

TEST_CASE("header matching is normalized") {
  std::string text =
      "ACCOUNT.NAME,post created date,Post_Created_Time,Expandedlinks.Original\n"
      "X,2020-05-05,01:02:03,https://a.example/\n";
  Dataset ds = parse_text(text);
  REQUIRE(ds.records.size() == 1);
  CHECK(ds.records[0].account_name == "X");
  CHECK(ds.records[0].link_original == "https://a.example/");
}

TEST_CASE("missing required headers abort with the missing list") {
  try {
    parse_text("account.name,type\nX,Photo\n");
    FAIL("expected SchemaMismatch");
  } catch (const SchemaMismatch& e) {
    REQUIRE(e.missing_headers().size() == 2);
    CHECK(e.missing_headers()[0] == "Post Created Date");
    CHECK(e.missing_headers()[1] == "Post Created Time");
  }
}

TEST_CASE("dmy date format flag") {
  std::string text = csv_header_row() + csv_row(base_row("A", "31-12-2014", "08:00:00"));
  CHECK(parse_text(text).report.rows_rejected == 1);  // iso default rejects
  Dataset ds = parse_text(text, ParseOptions{SchemaMode::kStrict, DateFormat::kDmy});
  REQUIRE(ds.records.size() == 1);
  CHECK(ds.records[0].post_created_date == CivilDate{2014, 12, 31});
}

TEST_CASE("parsing is deterministic") {
  std::string text = full_fixture();
  Dataset a = parse_text(text);
  Dataset b = parse_text(text);
  CHECK(a.records == b.records);
  CHECK(a.report == b.report);
}

TEST_CASE("round-trip: parse, serialize, parse is field-identical") {
  Dataset first = parse_text(full_fixture());
  std::ostringstream out;
  serialize_csv(first, out);
  Dataset second = parse_text(out.str());
  CHECK(first.records == second.records);
}

TEST_CASE("invalid utf-8 is replaced and counted") {
  auto row = base_row("Bad\xFFName", "2020-01-01", "10:00:00");
  std::string text = csv_header_row() + csv_row(row);
  Dataset ds = parse_text(text);
  CHECK(ds.report.encoding_replacements == 1);
  REQUIRE(ds.records.size() == 1);
  CHECK(ds.records[0].account_name == "Bad\xEF\xBF\xBDName");
}

TEST_CASE("merge drops self-duplicates") {
  std::string text = csv_header_row() +
                     csv_row([] {
                       auto r = base_row("X", "2020-01-01", "10:00:00");
                       r["platformId"] = "1";
                       r["postUrl"] = "http://p/1";
                       return r;
                     }()) +
                     csv_row([] {
                       auto r = base_row("Y", "2020-01-02", "11:00:00");
                       r["platformId"] = "2";
                       r["postUrl"] = "http://p/2";
                       return r;
                     }());
  Dataset d = parse_text(text);
  Dataset merged = merge_datasets({d, d});
  CHECK(merged.records.size() == 2);
  CHECK(merged.report.rejection_reasons.at("duplicate") == 2);
  CHECK(merged.report.rows_read == 4);
  CHECK(merged.report.rows_read == merged.report.rows_accepted + merged.report.rows_rejected);
}

TEST_CASE("merge keeps disjoint parts") {
  auto make = [](std::initializer_list<const char*> names, int day) {
    std::string text = csv_header_row();
    int i = 1;
    for (const char* name : names) {
      auto r = base_row(name, "2020-01-0" + std::to_string(day), "10:00:00");
      r["platformId"] = std::to_string(day * 10 + i);
      r["postUrl"] = std::string("http://p/") + name;
      ++i;
      text += csv_row(r);
    }
    return parse_text(text);
  };
  Dataset merged = merge_datasets({make({"A", "B"}, 1), make({"C", "D", "E"}, 2)});
  CHECK(merged.records.size() == 5);
  CHECK(merged.report.rejection_reasons.count("duplicate") == 0);
}

TEST_CASE("merge dedups on the platform id and url pair") {
  // Brute-force expectation: the union of keyed rows.
  std::vector<std::pair<std::string, std::string>> batch1 = {{"1", "u1"}, {"2", "u2"}, {"3", "u3"}};
  std::vector<std::pair<std::string, std::string>> batch2 = {{"3", "u3"}, {"4", "u4"}};
  std::set<std::pair<std::string, std::string>> expected;
  for (auto& p : batch1) expected.insert(p);
  for (auto& p : batch2) expected.insert(p);

  auto make = [](const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string text = csv_header_row();
    for (const auto& [pid, url] : rows) {
      auto r = base_row("Actor" + pid, "2020-01-01", "10:00:00");
      r["platformId"] = pid;
      r["postUrl"] = url;
      text += csv_row(r);
    }
    return parse_text(text);
  };
  Dataset merged = merge_datasets({make(batch1), make(batch2)});
  CHECK(merged.records.size() == expected.size());
  CHECK(merged.report.rejection_reasons.at("duplicate") == batch1.size() + batch2.size() - expected.size());
}

TEST_CASE("rows without the dedup key fall back to whole-record identity") {
  auto r1 = base_row("A", "2020-01-01", "10:00:00");  // no platformId/postUrl
  auto r2 = base_row("A", "2020-01-01", "10:00:00");
  auto r3 = base_row("A", "2020-01-01", "10:00:01");
  std::string text = csv_header_row() + csv_row(r1) + csv_row(r2) + csv_row(r3);
  Dataset merged = merge_datasets({parse_text(text)});
  CHECK(merged.records.size() == 2);  // r1 == r2
  CHECK(merged.report.rejection_reasons.at("duplicate") == 1);
}

TEST_CASE("date helpers round-trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> days(-200000, 200000);
  for (int i = 0; i < 500; ++i) {
    std::int64_t d = days(rng);
    CHECK(days_from_civil(civil_from_days(d)) == d);
  }
  CHECK(days_from_civil(CivilDate{1970, 1, 1}) == 0);
  CHECK(format_date(CivilDate{2014, 12, 31}) == "2014-12-31");
  CHECK(valid_date(CivilDate{2020, 2, 29}));
  CHECK_FALSE(valid_date(CivilDate{2021, 2, 29}));
}
