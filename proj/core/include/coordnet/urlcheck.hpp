#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace coordnet {

struct RankedLink {
  std::string url;
  std::uint64_t count = 0;
};

// Drops every URL containing the literal substring "www.facebook.com".
// Substring match on purpose: removed Facebook content does not 404, so
// probing those is meaningless, and host parsing would also drop mobile
// variants the measurement keeps.
std::vector<RankedLink> filter_non_facebook(std::vector<RankedLink> links);

enum class LinkOutcome {
  kValid,
  kHttpError,         // final status >= 400
  kDnsFailure,
  kConnectFailure,
  kTimeout,
  kTooManyRedirects,
  kUnsupportedUrl,    // not an http(s) URL we can probe
};

const char* to_string(LinkOutcome outcome);

struct LinkStatus {
  std::string url;
  LinkOutcome outcome = LinkOutcome::kValid;
  std::optional<int> http_status;  // final status when one was received
  std::string checked_at;          // ISO-8601 UTC
  std::int64_t elapsed_ms = 0;
  std::string detail;

  bool broken() const { return outcome != LinkOutcome::kValid; }
};

struct CheckPolicy {
  int timeout_ms = 10000;
  int max_redirects = 5;
  bool head_then_get = true;  // HEAD first, GET on 405/501
  int concurrency_limit = 32;
  int per_host_delay_ms = 250;
  std::string user_agent = "coordnet-linkcheck/0.1";
  std::string proxy;  // "host:port"; empty disables
};

struct LivenessReport {
  std::uint64_t checked = 0;
  std::uint64_t broken = 0;
  double broken_fraction = 0.0;
  std::vector<LinkStatus> statuses;  // input order
  CheckPolicy policy;
};

// Probes every URL once. Bounded concurrency with per-host serialization:
// two requests to one host start at least per_host_delay_ms apart. Throws
// EmptyInput on an empty list. Callers filter Facebook URLs first.
LivenessReport check_urls(const std::vector<std::string>& urls, const CheckPolicy& policy);

// Two-column (url,count) CSV as written by the stats link report.
std::vector<RankedLink> load_links_csv(std::istream& in);
void save_links_csv(const std::vector<RankedLink>& links, std::ostream& out);

}  // namespace coordnet
