#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coordnet {

// Reproducibility record written next to every pipeline run's artifacts.
struct RunManifest {
  std::string tool_version;
  std::string command_line;
  std::string started;   // ISO-8601 UTC
  std::string finished;
  std::map<std::string, std::string> input_digests;  // path -> fnv1a64 hex
  std::map<std::string, std::uint64_t> seeds;        // purpose -> seed
  std::vector<std::string> artifacts;                // files written, in order
};

std::string manifest_json(const RunManifest& manifest);

std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t v);
std::string utc_now_iso();

}  // namespace coordnet
