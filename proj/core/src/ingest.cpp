#include "coordnet/ingest.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "coordnet/csv.hpp"
#include "coordnet/error.hpp"
#include "coordnet/utf8.hpp"

namespace coordnet {

namespace {

const std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return s.substr(b, e - b);
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  return out;
}

}  // namespace

bool valid_date(const CivilDate& d) {
  if (d.year < 1 || d.year > 9999) return false;
  if (d.month < 1 || d.month > 12) return false;
  int dim = kDaysInMonth[static_cast<std::size_t>(d.month - 1)];
  if (d.month == 2 && is_leap(d.year)) dim = 29;
  return d.day >= 1 && d.day <= dim;
}

// Howard Hinnant's civil-days algorithm.
std::int64_t days_from_civil(const CivilDate& d) {
  std::int64_t y = d.year;
  const int m = d.month;
  const int day = d.day;
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned day = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(day)};
}

std::string format_date(const CivilDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::string format_time(const TimeOfDay& t) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d", t.hour, t.minute, t.second);
  return buf;
}

const std::vector<std::string>& schema_headers() {
  static const std::vector<std::string> headers = {
      "account.name",
      "account.handle",
      "platformId",
      "Page Category",
      "Page Admin Top Country",
      "Page Description",
      "Page Created",
      "subscriberCount",
      "Followers at Posting",
      "date",
      "Post Created Date",
      "Post Created Time",
      "type",
      "totalInteraction",
      "statistics.actual.likeCount",
      "statistics.actual.commentCount",
      "statistics.actual.shareCount",
      "statistics.actual.loveCount",
      "statistics.actual.wowCount",
      "statistics.actual.hahaCount",
      "statistics.actual.sadCount",
      "statistics.actual.angryCount",
      "statistics.actual.careCount",
      "Video Share Status",
      "Is Video Owner?",
      "statistics.actual.videoPostViewCount",
      "statistics.actual.videoTotalViewCount",
      "statistics.actual.videoAllCrosspostsViewCount",
      "Video Length",
      "postUrl",
      "message",
      "expandedLinks.original",
      "expandedLinks.expanded",
      "imageText",
      "title",
      "description",
      "brandedContentSponsor.platformId",
      "brandedContentSponsor.name",
      "brandedContentSponsor.category",
      "score",
  };
  return headers;
}

std::string normalize_header(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out.push_back(c);
  }
  return out;
}

namespace {

enum class Col : std::size_t {
  kAccountName = 0,
  kAccountHandle,
  kPlatformId,
  kPageCategory,
  kPageAdminTopCountry,
  kPageDescription,
  kPageCreated,
  kSubscriberCount,
  kFollowersAtPosting,
  kDate,
  kPostCreatedDate,
  kPostCreatedTime,
  kType,
  kTotalInteraction,
  kLike,
  kComment,
  kShare,
  kLove,
  kWow,
  kHaha,
  kSad,
  kAngry,
  kCare,
  kVideoShareStatus,
  kIsVideoOwner,
  kVideoPostViews,
  kVideoTotalViews,
  kVideoCrosspostViews,
  kVideoLength,
  kPostUrl,
  kMessage,
  kLinkOriginal,
  kLinkExpanded,
  kImageText,
  kTitle,
  kDescription,
  kSponsorPlatformId,
  kSponsorName,
  kSponsorCategory,
  kScore,
  kCount,
};

constexpr std::size_t kColCount = static_cast<std::size_t>(Col::kCount);

struct ColumnMap {
  std::array<int, kColCount> index;  // -1 when the header is absent

  const std::string* cell(const std::vector<std::string>& fields, Col c) const {
    int i = index[static_cast<std::size_t>(c)];
    if (i < 0 || static_cast<std::size_t>(i) >= fields.size()) return nullptr;
    return &fields[static_cast<std::size_t>(i)];
  }
};

ColumnMap map_headers(const std::vector<std::string>& header_row) {
  ColumnMap map;
  map.index.fill(-1);
  std::map<std::string, std::size_t> normalized_to_col;
  const auto& canonical = schema_headers();
  for (std::size_t i = 0; i < canonical.size(); ++i)
    normalized_to_col[normalize_header(canonical[i])] = i;

  for (std::size_t i = 0; i < header_row.size(); ++i) {
    std::string name(trim(header_row[i]));
    if (i == 0 && name.size() >= 3 && static_cast<unsigned char>(name[0]) == 0xEF &&
        static_cast<unsigned char>(name[1]) == 0xBB && static_cast<unsigned char>(name[2]) == 0xBF)
      name.erase(0, 3);  // strip UTF-8 BOM
    auto it = normalized_to_col.find(normalize_header(name));
    if (it != normalized_to_col.end() && map.index[it->second] < 0)
      map.index[it->second] = static_cast<int>(i);
  }

  std::vector<std::string> missing;
  for (Col required : {Col::kAccountName, Col::kPostCreatedDate, Col::kPostCreatedTime}) {
    if (map.index[static_cast<std::size_t>(required)] < 0)
      missing.push_back(canonical[static_cast<std::size_t>(required)]);
  }
  if (!missing.empty()) throw SchemaMismatch(std::move(missing));
  return map;
}

bool parse_int64(std::string_view s, std::int64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_fixed_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 4) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

bool parse_date(std::string_view s, DateFormat fmt, CivilDate& out) {
  s = trim(s);
  // tolerate a trailing time part ("2019-04-16 05:02:58")
  if (auto sp = s.find(' '); sp != std::string_view::npos) s = s.substr(0, sp);
  std::array<std::string_view, 3> parts;
  std::size_t n = 0, start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '-' || s[i] == '/') {
      if (n >= 3) return false;
      parts[n++] = s.substr(start, i - start);
      start = i + 1;
    }
  }
  if (n != 3) return false;
  int a, b, c;
  if (!parse_fixed_int(parts[0], a) || !parse_fixed_int(parts[1], b) || !parse_fixed_int(parts[2], c))
    return false;
  CivilDate d;
  if (fmt == DateFormat::kIso) {
    d = CivilDate{a, b, c};
  } else {
    d = CivilDate{c, b, a};
  }
  if (!valid_date(d)) return false;
  out = d;
  return true;
}

bool parse_time(std::string_view s, TimeOfDay& out) {
  s = trim(s);
  std::array<std::string_view, 3> parts;
  std::size_t n = 0, start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      if (n >= 3) return false;
      parts[n++] = s.substr(start, i - start);
      start = i + 1;
    }
  }
  if (n != 3) return false;
  int h, m, sec;
  if (!parse_fixed_int(parts[0], h) || !parse_fixed_int(parts[1], m) || !parse_fixed_int(parts[2], sec))
    return false;
  if (h > 23 || m > 59 || sec > 60) return false;
  out = TimeOfDay{h, m, sec};
  return true;
}

bool parse_bool(std::string_view s, bool& out) {
  std::string v = lower_ascii(trim(s));
  if (v == "yes" || v == "true" || v == "1") {
    out = true;
    return true;
  }
  if (v == "no" || v == "false" || v == "0") {
    out = false;
    return true;
  }
  return false;
}

std::string canonical_post_type(std::string_view raw) {
  std::string key;
  for (char c : trim(raw)) {
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    if (c == ' ' || c == '-') c = '_';
    key.push_back(c);
  }
  static const std::unordered_set<std::string> kKnown = {"photo", "link", "native_video",
                                                         "status", "live_video"};
  if (kKnown.count(key)) return key;
  return std::string(trim(raw));
}

// Per-row parse. On failure returns the rejection reason; the record is
// valid only when the returned string is empty.
struct RowParser {
  const ColumnMap& cols;
  ParseOptions options;
  std::string reject_reason;

  std::optional<std::string> text(const std::vector<std::string>& f, Col c) const {
    const std::string* cell = cols.cell(f, c);
    if (!cell || cell->empty()) return std::nullopt;
    return *cell;
  }

  // Integer cell; `nonnegative` enforces the >= 0 invariant. A malformed
  // value rejects the row in strict mode and degrades to absent otherwise.
  std::optional<std::int64_t> integer(const std::vector<std::string>& f, Col c, bool nonnegative) {
    const std::string* cell = cols.cell(f, c);
    if (!cell || trim(*cell).empty()) return std::nullopt;
    std::int64_t v;
    if (parse_int64(*cell, v) && (!nonnegative || v >= 0)) return v;
    flag(c);
    return std::nullopt;
  }

  void flag(Col c) {
    if (options.mode == SchemaMode::kStrict && reject_reason.empty())
      reject_reason = "malformed " + schema_headers()[static_cast<std::size_t>(c)];
  }

  bool parse(const std::vector<std::string>& fields, PostRecord& rec) {
    reject_reason.clear();

    const std::string* name = cols.cell(fields, Col::kAccountName);
    std::string_view trimmed_name = name ? trim(*name) : std::string_view{};
    if (trimmed_name.empty()) {
      reject_reason = "missing account_name";
      return false;
    }
    rec.account_name = std::string(trimmed_name);

    const std::string* date_cell = cols.cell(fields, Col::kPostCreatedDate);
    if (!date_cell || !parse_date(*date_cell, options.date_format, rec.post_created_date)) {
      reject_reason = "bad post_created_date";
      return false;
    }
    const std::string* time_cell = cols.cell(fields, Col::kPostCreatedTime);
    if (!time_cell || !parse_time(*time_cell, rec.post_created_time)) {
      reject_reason = "bad post_created_time";
      return false;
    }

    rec.account_handle = text(fields, Col::kAccountHandle);
    rec.platform_id = integer(fields, Col::kPlatformId, false);
    rec.page_category = text(fields, Col::kPageCategory);
    rec.page_admin_top_country = text(fields, Col::kPageAdminTopCountry);
    rec.page_description = text(fields, Col::kPageDescription);

    rec.page_created = std::nullopt;
    if (const std::string* cell = cols.cell(fields, Col::kPageCreated); cell && !trim(*cell).empty()) {
      CivilDate d;
      if (parse_date(*cell, options.date_format, d))
        rec.page_created = d;
      else
        flag(Col::kPageCreated);
    }

    rec.subscriber_count = integer(fields, Col::kSubscriberCount, true);
    rec.followers_at_posting = integer(fields, Col::kFollowersAtPosting, true);
    rec.posted_at = text(fields, Col::kDate);

    const std::string* type_cell = cols.cell(fields, Col::kType);
    rec.post_type = type_cell ? canonical_post_type(*type_cell) : std::string{};

    rec.total_interactions = integer(fields, Col::kTotalInteraction, true);
    rec.reactions.like = integer(fields, Col::kLike, true);
    rec.reactions.comment = integer(fields, Col::kComment, true);
    rec.reactions.share = integer(fields, Col::kShare, true);
    rec.reactions.love = integer(fields, Col::kLove, true);
    rec.reactions.wow = integer(fields, Col::kWow, true);
    rec.reactions.haha = integer(fields, Col::kHaha, true);
    rec.reactions.sad = integer(fields, Col::kSad, true);
    rec.reactions.angry = integer(fields, Col::kAngry, true);
    rec.reactions.care = integer(fields, Col::kCare, true);

    rec.video_share_status = text(fields, Col::kVideoShareStatus);

    rec.is_video_owner = std::nullopt;
    if (const std::string* cell = cols.cell(fields, Col::kIsVideoOwner); cell && !trim(*cell).empty()) {
      bool b;
      if (parse_bool(*cell, b))
        rec.is_video_owner = b;
      else
        flag(Col::kIsVideoOwner);
    }

    rec.video_views.post = integer(fields, Col::kVideoPostViews, false);
    rec.video_views.total = integer(fields, Col::kVideoTotalViews, false);
    rec.video_views.crossposts = integer(fields, Col::kVideoCrosspostViews, false);
    rec.video_length = text(fields, Col::kVideoLength);
    rec.post_url = text(fields, Col::kPostUrl);
    rec.message = text(fields, Col::kMessage);
    rec.link_original = text(fields, Col::kLinkOriginal);
    rec.link_expanded = text(fields, Col::kLinkExpanded);
    rec.image_text = text(fields, Col::kImageText);
    rec.title = text(fields, Col::kTitle);
    rec.description = text(fields, Col::kDescription);

    auto sponsor_id = integer(fields, Col::kSponsorPlatformId, false);
    auto sponsor_name = text(fields, Col::kSponsorName);
    auto sponsor_category = text(fields, Col::kSponsorCategory);
    if (sponsor_id || sponsor_name || sponsor_category)
      rec.branded_sponsor = BrandedSponsor{sponsor_id, sponsor_name, sponsor_category};
    else
      rec.branded_sponsor = std::nullopt;

    rec.score = std::nullopt;
    if (const std::string* cell = cols.cell(fields, Col::kScore); cell && !trim(*cell).empty()) {
      double v;
      if (parse_double(*cell, v))
        rec.score = v;
      else
        flag(Col::kScore);
    }

    return reject_reason.empty();
  }
};

std::string format_int64(std::int64_t v) { return std::to_string(v); }

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void record_to_fields(const PostRecord& r, std::vector<std::string>& out) {
  out.assign(kColCount, std::string{});
  auto set = [&](Col c, std::string v) { out[static_cast<std::size_t>(c)] = std::move(v); };
  auto set_opt = [&](Col c, const std::optional<std::string>& v) {
    if (v) out[static_cast<std::size_t>(c)] = *v;
  };
  auto set_int = [&](Col c, const std::optional<std::int64_t>& v) {
    if (v) out[static_cast<std::size_t>(c)] = format_int64(*v);
  };

  set(Col::kAccountName, r.account_name);
  set_opt(Col::kAccountHandle, r.account_handle);
  set_int(Col::kPlatformId, r.platform_id);
  set_opt(Col::kPageCategory, r.page_category);
  set_opt(Col::kPageAdminTopCountry, r.page_admin_top_country);
  set_opt(Col::kPageDescription, r.page_description);
  if (r.page_created) set(Col::kPageCreated, format_date(*r.page_created));
  set_int(Col::kSubscriberCount, r.subscriber_count);
  set_int(Col::kFollowersAtPosting, r.followers_at_posting);
  set_opt(Col::kDate, r.posted_at);
  set(Col::kPostCreatedDate, format_date(r.post_created_date));
  set(Col::kPostCreatedTime, format_time(r.post_created_time));
  set(Col::kType, r.post_type);
  set_int(Col::kTotalInteraction, r.total_interactions);
  set_int(Col::kLike, r.reactions.like);
  set_int(Col::kComment, r.reactions.comment);
  set_int(Col::kShare, r.reactions.share);
  set_int(Col::kLove, r.reactions.love);
  set_int(Col::kWow, r.reactions.wow);
  set_int(Col::kHaha, r.reactions.haha);
  set_int(Col::kSad, r.reactions.sad);
  set_int(Col::kAngry, r.reactions.angry);
  set_int(Col::kCare, r.reactions.care);
  set_opt(Col::kVideoShareStatus, r.video_share_status);
  if (r.is_video_owner) set(Col::kIsVideoOwner, *r.is_video_owner ? "yes" : "no");
  set_int(Col::kVideoPostViews, r.video_views.post);
  set_int(Col::kVideoTotalViews, r.video_views.total);
  set_int(Col::kVideoCrosspostViews, r.video_views.crossposts);
  set_opt(Col::kVideoLength, r.video_length);
  set_opt(Col::kPostUrl, r.post_url);
  set_opt(Col::kMessage, r.message);
  set_opt(Col::kLinkOriginal, r.link_original);
  set_opt(Col::kLinkExpanded, r.link_expanded);
  set_opt(Col::kImageText, r.image_text);
  set_opt(Col::kTitle, r.title);
  set_opt(Col::kDescription, r.description);
  if (r.branded_sponsor) {
    set_int(Col::kSponsorPlatformId, r.branded_sponsor->platform_id);
    set_opt(Col::kSponsorName, r.branded_sponsor->name);
    set_opt(Col::kSponsorCategory, r.branded_sponsor->category);
  }
  if (r.score) set(Col::kScore, format_double(*r.score));
}

}  // namespace

Dataset parse_csv(std::istream& in, const ParseOptions& options) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw SchemaMismatch(schema_headers());

  ColumnMap cols = map_headers(fields);
  RowParser parser{cols, options, {}};

  Dataset ds;
  PostRecord rec;
  while (reader.next(fields)) {
    ++ds.report.rows_read;
    for (auto& f : fields) ds.report.encoding_replacements += utf8::sanitize(f);
    if (parser.parse(fields, rec)) {
      ++ds.report.rows_accepted;
      ds.records.push_back(rec);
    } else {
      ++ds.report.rows_rejected;
      ++ds.report.rejection_reasons[parser.reject_reason];
    }
  }
  return ds;
}

Dataset parse_csv_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open input file: " + path);
  Dataset ds = parse_csv(in, options);
  ds.source_files.push_back(path);
  return ds;
}

Dataset merge_datasets(std::vector<Dataset> parts) {
  Dataset out;
  std::unordered_set<std::string> keyed;  // (platform_id, post_url) pairs
  std::unordered_set<std::string> full;   // canonical row text for unkeyed rows
  std::vector<std::string> fields;

  for (auto& part : parts) {
    out.report.rows_read += part.report.rows_read;
    out.report.rows_rejected += part.report.rows_rejected;
    out.report.encoding_replacements += part.report.encoding_replacements;
    for (const auto& [reason, count] : part.report.rejection_reasons)
      out.report.rejection_reasons[reason] += count;
    for (auto& f : part.source_files) out.source_files.push_back(std::move(f));

    for (auto& rec : part.records) {
      bool fresh;
      if (rec.platform_id && rec.post_url) {
        fresh = keyed.insert(std::to_string(*rec.platform_id) + '\n' + *rec.post_url).second;
      } else {
        record_to_fields(rec, fields);
        std::string key;
        for (const auto& f : fields) {
          key += csv::escape(f);
          key.push_back(',');
        }
        fresh = full.insert(std::move(key)).second;
      }
      if (fresh) {
        out.records.push_back(std::move(rec));
      } else {
        ++out.report.rows_rejected;
        ++out.report.rejection_reasons["duplicate"];
      }
    }
  }
  out.report.rows_accepted = out.records.size();
  return out;
}

void serialize_csv(const Dataset& dataset, std::ostream& out) {
  csv::write_record(out, schema_headers());
  std::vector<std::string> fields;
  for (const auto& rec : dataset.records) {
    record_to_fields(rec, fields);
    csv::write_record(out, fields);
  }
}

std::string ingest_report_json(const Dataset& dataset) {
  nlohmann::ordered_json j;
  j["rows_read"] = dataset.report.rows_read;
  j["rows_accepted"] = dataset.report.rows_accepted;
  j["rows_rejected"] = dataset.report.rows_rejected;
  j["rejection_reasons"] = nlohmann::ordered_json::object();
  for (const auto& [reason, count] : dataset.report.rejection_reasons)
    j["rejection_reasons"][reason] = count;
  j["encoding_replacements"] = dataset.report.encoding_replacements;
  j["source_files"] = dataset.source_files;
  return j.dump(2) + "\n";
}

}  // namespace coordnet
