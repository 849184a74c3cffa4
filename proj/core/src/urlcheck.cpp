#include "coordnet/urlcheck.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <netdb.h>
#include <sys/socket.h>

#include <httplib.h>

#include "coordnet/csv.hpp"
#include "coordnet/error.hpp"

namespace coordnet {

const char* to_string(LinkOutcome outcome) {
  switch (outcome) {
    case LinkOutcome::kValid:
      return "valid";
    case LinkOutcome::kHttpError:
      return "http_error";
    case LinkOutcome::kDnsFailure:
      return "dns_failure";
    case LinkOutcome::kConnectFailure:
      return "connect_failure";
    case LinkOutcome::kTimeout:
      return "timeout";
    case LinkOutcome::kTooManyRedirects:
      return "too_many_redirects";
    case LinkOutcome::kUnsupportedUrl:
      return "unsupported_url";
  }
  return "?";
}

std::vector<RankedLink> filter_non_facebook(std::vector<RankedLink> links) {
  std::erase_if(links, [](const RankedLink& l) {
    return l.url.find("www.facebook.com") != std::string::npos;
  });
  return links;
}

namespace {

struct ParsedUrl {
  std::string scheme;
  std::string host;
  int port = 80;
  std::string target;  // path + query, always starts with '/'
};

std::optional<ParsedUrl> parse_url(std::string_view url) {
  ParsedUrl out;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) return std::nullopt;
  out.scheme = std::string(url.substr(0, scheme_end));
  for (char& c : out.scheme)
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  if (out.scheme != "http" && out.scheme != "https") return std::nullopt;
  out.port = out.scheme == "https" ? 443 : 80;

  std::string_view rest = url.substr(scheme_end + 3);
  auto path_start = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, path_start);
  if (authority.empty()) return std::nullopt;

  if (auto colon = authority.rfind(':'); colon != std::string_view::npos) {
    std::string_view port_str = authority.substr(colon + 1);
    int port = 0;
    auto [ptr, ec] = std::from_chars(port_str.data(), port_str.data() + port_str.size(), port);
    if (ec != std::errc() || ptr != port_str.data() + port_str.size() || port <= 0 || port > 65535)
      return std::nullopt;
    out.port = port;
    authority = authority.substr(0, colon);
  }
  out.host = std::string(authority);
  if (out.host.empty()) return std::nullopt;

  if (path_start == std::string_view::npos) {
    out.target = "/";
  } else {
    std::string_view tail = rest.substr(path_start);
    if (auto frag = tail.find('#'); frag != std::string_view::npos) tail = tail.substr(0, frag);
    out.target = tail.empty() || tail[0] == '?' ? "/" + std::string(tail) : std::string(tail);
  }
  return out;
}

bool host_resolves(const std::string& host) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  int rc = getaddrinfo(host.c_str(), nullptr, &hints, &result);
  if (result) freeaddrinfo(result);
  return rc == 0;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool is_redirect(int status) {
  return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

LinkOutcome classify_error(httplib::Error err) {
  switch (err) {
    case httplib::Error::ConnectionTimeout:
      return LinkOutcome::kTimeout;
    case httplib::Error::Read:
    case httplib::Error::Write:
      return LinkOutcome::kTimeout;  // read/write deadline exceeded
    default:
      return LinkOutcome::kConnectFailure;
  }
}

// Follows redirects by hand so the hop cap and final status stay explicit.
LinkStatus probe_url(const std::string& url, const CheckPolicy& policy) {
  LinkStatus status;
  status.url = url;
  status.checked_at = utc_timestamp();
  auto started = std::chrono::steady_clock::now();
  auto finish = [&](LinkOutcome outcome, std::optional<int> http, std::string detail) {
    status.outcome = outcome;
    status.http_status = http;
    status.detail = std::move(detail);
    status.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return status;
  };

  std::string current = url;
  for (int hop = 0; hop <= policy.max_redirects; ++hop) {
    auto parsed = parse_url(current);
    if (!parsed) return finish(LinkOutcome::kUnsupportedUrl, std::nullopt, "cannot parse: " + current);
#ifndef COORDNET_HTTPS
    if (parsed->scheme == "https")
      return finish(LinkOutcome::kUnsupportedUrl, std::nullopt, "built without TLS support");
#endif

    if (policy.proxy.empty() && !host_resolves(parsed->host))
      return finish(LinkOutcome::kDnsFailure, std::nullopt, "cannot resolve " + parsed->host);

    httplib::Client client(parsed->scheme + "://" + parsed->host + ":" + std::to_string(parsed->port));
    client.set_follow_location(false);
    client.set_connection_timeout(std::chrono::milliseconds(policy.timeout_ms));
    client.set_read_timeout(std::chrono::milliseconds(policy.timeout_ms));
    client.set_write_timeout(std::chrono::milliseconds(policy.timeout_ms));
    client.set_default_headers({{"User-Agent", policy.user_agent}});
#ifdef COORDNET_HTTPS
    client.enable_server_certificate_verification(false);
#endif
    if (!policy.proxy.empty()) {
      auto colon = policy.proxy.rfind(':');
      if (colon != std::string::npos) {
        int pport = 0;
        std::from_chars(policy.proxy.data() + colon + 1, policy.proxy.data() + policy.proxy.size(),
                        pport);
        client.set_proxy(policy.proxy.substr(0, colon), pport);
      }
    }

    httplib::Result res = policy.head_then_get ? client.Head(parsed->target)
                                               : client.Get(parsed->target);
    if (res && policy.head_then_get && (res->status == 405 || res->status == 501))
      res = client.Get(parsed->target);
    if (!res) {
      LinkOutcome outcome = classify_error(res.error());
      return finish(outcome, std::nullopt, httplib::to_string(res.error()));
    }

    if (is_redirect(res->status)) {
      if (hop == policy.max_redirects)
        return finish(LinkOutcome::kTooManyRedirects, res->status,
                      "redirect chain longer than " + std::to_string(policy.max_redirects));
      std::string location = res->get_header_value("Location");
      if (location.empty())
        return finish(LinkOutcome::kHttpError, res->status, "redirect without Location");
      if (location.find("://") != std::string::npos) {
        current = location;
      } else if (!location.empty() && location[0] == '/') {
        current = parsed->scheme + "://" + parsed->host + ":" + std::to_string(parsed->port) + location;
      } else {
        current = parsed->scheme + "://" + parsed->host + ":" + std::to_string(parsed->port) + "/" + location;
      }
      continue;
    }
    if (res->status >= 400)
      return finish(LinkOutcome::kHttpError, res->status, "");
    return finish(LinkOutcome::kValid, res->status, "");
  }
  return finish(LinkOutcome::kTooManyRedirects, std::nullopt, "redirect chain exhausted");
}

}  // namespace

LivenessReport check_urls(const std::vector<std::string>& urls, const CheckPolicy& policy) {
  if (urls.empty()) throw EmptyInput("no URLs to check");

  LivenessReport report;
  report.policy = policy;
  report.statuses.resize(urls.size());

  // Group indices by host, keeping input order inside a group. One worker
  // owns a whole host group, which both serializes per-host traffic and
  // makes the start-to-start delay easy to honor.
  std::vector<std::vector<std::size_t>> host_groups;
  {
    std::unordered_map<std::string, std::size_t> group_of_host;
    for (std::size_t i = 0; i < urls.size(); ++i) {
      auto parsed = parse_url(urls[i]);
      std::string key = parsed ? parsed->host + ":" + std::to_string(parsed->port) : "";
      auto [it, fresh] = group_of_host.emplace(key, host_groups.size());
      if (fresh) host_groups.emplace_back();
      host_groups[it->second].push_back(i);
    }
  }

  std::mutex mu;
  std::size_t next_group = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t g;
      {
        std::lock_guard lock(mu);
        if (next_group >= host_groups.size()) return;
        g = next_group++;
      }
      auto last_start = std::chrono::steady_clock::time_point::min();
      for (std::size_t idx : host_groups[g]) {
        if (last_start != std::chrono::steady_clock::time_point::min()) {
          auto earliest = last_start + std::chrono::milliseconds(policy.per_host_delay_ms);
          std::this_thread::sleep_until(earliest);
        }
        last_start = std::chrono::steady_clock::now();
        report.statuses[idx] = probe_url(urls[idx], policy);
      }
    }
  };

  int workers = std::max(1, std::min<int>(policy.concurrency_limit,
                                          static_cast<int>(host_groups.size())));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  report.checked = report.statuses.size();
  for (const auto& s : report.statuses)
    if (s.broken()) ++report.broken;
  report.broken_fraction =
      report.checked ? static_cast<double>(report.broken) / static_cast<double>(report.checked) : 0.0;
  return report;
}

std::vector<RankedLink> load_links_csv(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  std::vector<RankedLink> links;
  bool first = true;
  while (reader.next(fields)) {
    if (fields.empty()) continue;
    if (first) {
      first = false;
      if (!fields.empty() && fields[0] == "url") continue;  // optional header
    }
    RankedLink link;
    link.url = fields[0];
    if (fields.size() > 1) {
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), n);
      if (ec == std::errc()) link.count = n;
      (void)ptr;
    }
    if (!link.url.empty()) links.push_back(std::move(link));
  }
  return links;
}

void save_links_csv(const std::vector<RankedLink>& links, std::ostream& out) {
  out << "url,count\n";
  for (const auto& l : links) {
    csv::write_field(out, l.url);
    out << ',' << l.count << '\n';
  }
}

}  // namespace coordnet
