#include "coordnet/manifest.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "coordnet/error.hpp"

namespace coordnet {

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open for digest: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string utc_now_iso() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["tool_version"] = manifest.tool_version;
  j["command_line"] = manifest.command_line;
  j["started"] = manifest.started;
  j["finished"] = manifest.finished;
  j["input_digests"] = nlohmann::ordered_json::object();
  for (const auto& [path, digest] : manifest.input_digests) j["input_digests"][path] = digest;
  j["seeds"] = nlohmann::ordered_json::object();
  for (const auto& [purpose, seed] : manifest.seeds) j["seeds"][purpose] = seed;
  j["artifacts"] = manifest.artifacts;
  return j.dump(2) + "\n";
}

}  // namespace coordnet
