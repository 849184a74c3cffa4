#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "coordnet/manifest.hpp"

namespace coordnet {

struct PipelineOptions {
  std::string command_line;
  int threads = 0;  // 0: hardware concurrency
  std::uint64_t default_seed = 0;
  bool quiet = false;
  std::string proxy;  // forwarded to urlcheck steps
};

struct PipelineOutcome {
  int exit_code = 0;  // 0 ok, 1 partial (link audit failed), 2 fatal
  RunManifest manifest;
};

// Parses a pipeline config (flat key/value globals plus ordered `step`
// lines, grammar in the README), executes the steps, and writes every
// artifact plus run_manifest.json under the configured outdir. Throws
// ConfigInvalid before running anything when the config is unusable.
PipelineOutcome run_pipeline(const std::string& config_path, const PipelineOptions& options,
                             std::ostream& log);

}  // namespace coordnet
