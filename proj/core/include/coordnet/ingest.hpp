#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coordnet {

struct CivilDate {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31
  auto operator<=>(const CivilDate&) const = default;
};

struct TimeOfDay {
  int hour = 0;
  int minute = 0;
  int second = 0;
  auto operator<=>(const TimeOfDay&) const = default;
};

bool valid_date(const CivilDate& d);

// Proleptic Gregorian day number (1970-01-01 -> 0). Used for bucketing.
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t days);

std::string format_date(const CivilDate& d);       // YYYY-MM-DD
std::string format_time(const TimeOfDay& t);       // HH:MM:SS

struct ReactionCounts {
  std::optional<std::int64_t> like;
  std::optional<std::int64_t> comment;
  std::optional<std::int64_t> share;
  std::optional<std::int64_t> love;
  std::optional<std::int64_t> wow;
  std::optional<std::int64_t> haha;
  std::optional<std::int64_t> sad;
  std::optional<std::int64_t> angry;
  std::optional<std::int64_t> care;
  bool operator==(const ReactionCounts&) const = default;
};

struct VideoViewCounts {
  std::optional<std::int64_t> post;
  std::optional<std::int64_t> total;
  std::optional<std::int64_t> crossposts;
  bool operator==(const VideoViewCounts&) const = default;
};

struct BrandedSponsor {
  std::optional<std::int64_t> platform_id;
  std::optional<std::string> name;
  std::optional<std::string> category;
  bool operator==(const BrandedSponsor&) const = default;
};

// One typed row of a CrowdTangle post export. Field names follow the export
// schema; text fields are kept verbatim so downstream token counts are
// reproducible. account_name is stored with surrounding whitespace trimmed.
struct PostRecord {
  std::string account_name;
  std::optional<std::string> account_handle;
  std::optional<std::int64_t> platform_id;
  std::optional<std::string> page_category;
  std::optional<std::string> page_admin_top_country;
  std::optional<std::string> page_description;
  std::optional<CivilDate> page_created;
  std::optional<std::int64_t> subscriber_count;
  std::optional<std::int64_t> followers_at_posting;
  std::optional<std::string> posted_at;  // raw 'date' column, verbatim
  CivilDate post_created_date;
  TimeOfDay post_created_time;
  std::string post_type;  // photo, link, native_video, status, live_video or verbatim
  std::optional<std::int64_t> total_interactions;
  ReactionCounts reactions;
  std::optional<std::string> video_share_status;
  std::optional<bool> is_video_owner;
  VideoViewCounts video_views;
  std::optional<std::string> video_length;
  std::optional<std::string> post_url;
  std::optional<std::string> message;
  std::optional<std::string> link_original;
  std::optional<std::string> link_expanded;
  std::optional<std::string> image_text;
  std::optional<std::string> title;
  std::optional<std::string> description;
  std::optional<BrandedSponsor> branded_sponsor;
  std::optional<double> score;

  bool operator==(const PostRecord&) const = default;
};

struct IngestReport {
  std::uint64_t rows_read = 0;
  std::uint64_t rows_accepted = 0;
  std::uint64_t rows_rejected = 0;
  std::map<std::string, std::uint64_t> rejection_reasons;
  std::uint64_t encoding_replacements = 0;
  bool operator==(const IngestReport&) const = default;
};

struct Dataset {
  std::vector<PostRecord> records;
  std::vector<std::string> source_files;
  IngestReport report;
};

enum class SchemaMode { kStrict, kLenient };
enum class DateFormat { kIso, kDmy };

struct ParseOptions {
  SchemaMode mode = SchemaMode::kStrict;
  DateFormat date_format = DateFormat::kIso;
};

// Canonical export header names, in column order (40 columns).
const std::vector<std::string>& schema_headers();

// Header matching key: lowercased with everything but [a-z0-9] dropped, so
// 'account.name', 'Account Name' and 'account_name' all collide.
std::string normalize_header(std::string_view name);

// Parses one CSV export. Throws MalformedCsv / SchemaMismatch; per-row
// problems are counted in the report instead of thrown.
Dataset parse_csv(std::istream& in, const ParseOptions& options = {});
Dataset parse_csv_file(const std::string& path, const ParseOptions& options = {});

// Concatenates datasets dropping duplicate rows. A duplicate keys on
// (platform_id, post_url) when both are present, otherwise on the full
// field tuple. Duplicates are counted under reason "duplicate".
Dataset merge_datasets(std::vector<Dataset> parts);

// Writes records back out as canonical CSV (all 40 columns, ISO dates).
// parse(serialize(parse(x))) == parse(x) field-for-field.
void serialize_csv(const Dataset& dataset, std::ostream& out);

std::string ingest_report_json(const Dataset& dataset);

}  // namespace coordnet
