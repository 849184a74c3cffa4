#include "coordnet/pipeline.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "coordnet/communities.hpp"
#include "coordnet/components.hpp"
#include "coordnet/error.hpp"
#include "coordnet/export.hpp"
#include "coordnet/graph.hpp"
#include "coordnet/ingest.hpp"
#include "coordnet/metrics.hpp"
#include "coordnet/report_json.hpp"
#include "coordnet/stats.hpp"
#include "coordnet/urlcheck.hpp"
#include "coordnet/version.hpp"

namespace fs = std::filesystem;

namespace coordnet {

namespace {

struct ConfigValue {
  std::string value;
  std::size_t line = 0;
};

struct StepDef {
  std::string name;
  std::map<std::string, ConfigValue> params;
  std::size_t line = 0;
};

struct Config {
  std::map<std::string, ConfigValue> globals;
  std::vector<StepDef> steps;
};

const std::map<std::string, std::set<std::string>>& step_schemas() {
  static const std::map<std::string, std::set<std::string>> schemas = {
      {"ingest", {"report"}},
      {"stats",
       {"reports", "k", "bucket", "stopwords", "word-fields", "bigrams", "out", "links-csv",
        "words-csv"}},
      {"graph", {"out"}},
      {"centrality", {"measures", "betweenness-mode", "top", "out", "scatter"}},
      {"components", {"top", "distance-mode", "local-n", "out"}},
      {"communities", {"k", "scope", "fast", "max-removals", "out"}},
      {"export", {"format", "communities", "out"}},
      {"urlcheck",
       {"input", "top", "timeout-ms", "concurrency", "per-host-delay-ms", "max-redirects",
        "out"}},
  };
  return schemas;
}

const std::set<std::string>& global_keys() {
  static const std::set<std::string> keys = {"input",  "outdir",      "threads",
                                             "seed",   "strict",      "date-format",
                                             "normalize-urls"};
  return keys;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      if (i > start) out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

Config parse_config(std::istream& in) {
  Config config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    std::string_view body = std::string_view(line).substr(b);

    if (body.starts_with("step ") || body == "step") {
      std::vector<std::string> tokens = split(body, ' ');
      if (tokens.size() < 2) throw ConfigInvalid("step without a name", line_no);
      StepDef step;
      step.name = tokens[1];
      step.line = line_no;
      auto schema = step_schemas().find(step.name);
      if (schema == step_schemas().end())
        throw ConfigInvalid("unknown step '" + step.name + "'", line_no);
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos)
          throw ConfigInvalid("expected key=value, got '" + tokens[i] + "'", line_no);
        std::string key = tokens[i].substr(0, eq);
        if (!schema->second.count(key))
          throw ConfigInvalid("unknown parameter for step '" + step.name + "'", line_no, key);
        step.params[key] = ConfigValue{tokens[i].substr(eq + 1), line_no};
      }
      config.steps.push_back(std::move(step));
      continue;
    }

    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw ConfigInvalid("expected 'key = value' or 'step ...'", line_no);
    auto strip = [](std::string_view s) {
      std::size_t x = 0, y = s.size();
      while (x < y && (s[x] == ' ' || s[x] == '\t')) ++x;
      while (y > x && (s[y - 1] == ' ' || s[y - 1] == '\t')) --y;
      return std::string(s.substr(x, y - x));
    };
    std::string key = strip(body.substr(0, eq));
    std::string value = strip(body.substr(eq + 1));
    if (!global_keys().count(key)) throw ConfigInvalid("unknown setting", line_no, key);
    config.globals[key] = ConfigValue{value, line_no};
  }
  if (config.steps.empty()) throw ConfigInvalid("config defines no steps", line_no ? line_no : 1);
  return config;
}

std::uint64_t parse_u64(const ConfigValue& v, const std::string& field) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.value.data(), v.value.data() + v.value.size(), out);
  if (ec != std::errc() || ptr != v.value.data() + v.value.size())
    throw ConfigInvalid("expected a non-negative integer, got '" + v.value + "'", v.line, field);
  return out;
}

bool parse_flag(const ConfigValue& v, const std::string& field) {
  if (v.value == "true" || v.value == "1" || v.value == "yes") return true;
  if (v.value == "false" || v.value == "0" || v.value == "no") return false;
  throw ConfigInvalid("expected true/false, got '" + v.value + "'", v.line, field);
}

// "sampled:<pivots>[:<seed>]" tail after the "sampled" keyword.
std::pair<std::uint32_t, std::optional<std::uint64_t>> parse_sampled_params(
    const std::string& text, std::size_t line, const std::string& field) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts.size() > 2)
    throw ConfigInvalid("expected <pivots>[:<seed>]", line, field);
  std::uint64_t pivots = parse_u64(ConfigValue{parts[0], line}, field);
  if (pivots == 0) throw ConfigInvalid("pivot count must be positive", line, field);
  std::optional<std::uint64_t> seed;
  if (parts.size() == 2) seed = parse_u64(ConfigValue{parts[1], line}, field);
  return {static_cast<std::uint32_t>(pivots), seed};
}

class PipelineRun {
 public:
  PipelineRun(Config config, std::string config_path, const PipelineOptions& options,
              std::ostream& log)
      : config_(std::move(config)), config_path_(std::move(config_path)), options_(options),
        log_(log) {
    outdir_ = config_.globals.count("outdir") ? config_.globals.at("outdir").value : "out";
    if (auto it = config_.globals.find("threads"); it != config_.globals.end())
      threads_ = static_cast<int>(parse_u64(it->second, "threads"));
    else
      threads_ = options.threads;
    if (auto it = config_.globals.find("seed"); it != config_.globals.end())
      seed_ = parse_u64(it->second, "seed");
    else
      seed_ = options.default_seed;

    parse_options_.mode = SchemaMode::kStrict;
    if (auto it = config_.globals.find("strict"); it != config_.globals.end())
      parse_options_.mode = parse_flag(it->second, "strict") ? SchemaMode::kStrict
                                                             : SchemaMode::kLenient;
    if (auto it = config_.globals.find("date-format"); it != config_.globals.end()) {
      if (it->second.value == "iso")
        parse_options_.date_format = DateFormat::kIso;
      else if (it->second.value == "dmy")
        parse_options_.date_format = DateFormat::kDmy;
      else
        throw ConfigInvalid("expected iso or dmy", it->second.line, "date-format");
    }
    if (auto it = config_.globals.find("input"); it != config_.globals.end())
      inputs_ = split(it->second.value, ',');
    validate_references();
  }

  PipelineOutcome run() {
    PipelineOutcome outcome;
    manifest_.tool_version = kVersion;
    manifest_.command_line = options_.command_line;
    manifest_.started = utc_now_iso();
    manifest_.input_digests[config_path_] = hex64(fnv1a64_file(config_path_));
    for (const auto& input : inputs_)
      manifest_.input_digests[input] = hex64(fnv1a64_file(input));

    fs::create_directories(outdir_);

    for (const auto& step : config_.steps) {
      info("step " + step.name);
      try {
        dispatch(step);
      } catch (const std::exception& e) {
        if (step.name == "urlcheck") {
          // The link audit depends on the network; its failure degrades the
          // run instead of killing it.
          info(std::string("urlcheck failed: ") + e.what());
          partial_ = true;
          continue;
        }
        throw;
      }
    }

    manifest_.finished = utc_now_iso();
    manifest_.seeds = seeds_;
    manifest_.artifacts = artifacts_;
    std::string manifest_path = (fs::path(outdir_) / "run_manifest.json").string();
    write_file(manifest_path, manifest_json(manifest_), false);

    outcome.exit_code = partial_ ? 1 : 0;
    outcome.manifest = manifest_;
    return outcome;
  }

 private:
  void info(const std::string& message) {
    if (!options_.quiet) log_ << "[coordnet] " << message << "\n";
  }

  // Steps may reference files produced by earlier steps; everything else
  // must exist before the run starts.
  void validate_references() {
    std::set<std::string> produced;
    auto will_produce = [&](const StepDef& step, const char* param, const char* fallback) {
      std::string name =
          step.params.count(param) ? step.params.at(param).value : std::string(fallback);
      produced.insert((fs::path(outdir_) / name).lexically_normal().string());
    };
    auto check_exists = [&](const std::string& path, std::size_t line, const std::string& field) {
      std::string in_outdir = (fs::path(outdir_) / path).lexically_normal().string();
      if (produced.count(in_outdir) || produced.count(fs::path(path).lexically_normal().string()))
        return;
      if (!fs::exists(path))
        throw ConfigInvalid("referenced input does not exist: " + path, line, field);
    };

    bool needs_dataset = false;
    for (const auto& step : config_.steps) {
      if (step.name == "ingest" || step.name == "stats" || step.name == "graph")
        needs_dataset = true;
      if (step.name == "centrality" || step.name == "components" || step.name == "communities" ||
          step.name == "export")
        needs_dataset = true;  // graph is built from the dataset
      if (step.name == "urlcheck" && !step.params.count("input")) needs_dataset = true;

      if (step.name == "stats" && step.params.count("stopwords"))
        check_exists(step.params.at("stopwords").value, step.params.at("stopwords").line,
                     "stopwords");
      if (step.name == "urlcheck" && step.params.count("input"))
        check_exists(step.params.at("input").value, step.params.at("input").line, "input");
      if (step.name == "export" && step.params.count("communities"))
        check_exists(step.params.at("communities").value, step.params.at("communities").line,
                     "communities");

      if (step.name == "ingest") will_produce(step, "report", "ingest_report.json");
      if (step.name == "stats") {
        will_produce(step, "out", "stats.json");
        if (step.params.count("links-csv")) will_produce(step, "links-csv", "links.csv");
        if (step.params.count("words-csv")) will_produce(step, "words-csv", "words.csv");
      }
      if (step.name == "graph") will_produce(step, "out", "graph.bin");
      if (step.name == "centrality") will_produce(step, "out", "centrality.json");
      if (step.name == "components") will_produce(step, "out", "components.json");
      if (step.name == "communities") will_produce(step, "out", "communities.json");
      if (step.name == "urlcheck") will_produce(step, "out", "liveness.json");
    }

    if (needs_dataset && inputs_.empty())
      throw ConfigInvalid("steps require an 'input' setting", 1, "input");
    for (const auto& input : inputs_) {
      if (!fs::exists(input))
        throw ConfigInvalid("referenced input does not exist: " + input,
                            config_.globals.at("input").line, "input");
    }
  }

  std::string artifact_path(const StepDef& step, const char* param, const char* fallback) {
    std::string name =
        step.params.count(param) ? step.params.at(param).value : std::string(fallback);
    return (fs::path(outdir_) / name).string();
  }

  // Resolves a step input: a file produced earlier in this run (under
  // outdir) wins over a path relative to the working directory.
  std::string resolve_ref(const std::string& value) const {
    std::string in_outdir = (fs::path(outdir_) / value).string();
    if (fs::exists(in_outdir)) return in_outdir;
    return value;
  }

  void write_file(const std::string& path, const std::string& content, bool track = true) {
    fs::create_directories(fs::path(path).parent_path().empty()
                               ? fs::path(".")
                               : fs::path(path).parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open output file: " + path);
    out << content;
    if (!out) throw IoFailure("failed writing " + path);
    if (track) artifacts_.push_back(path);
  }

  const Dataset& ensure_dataset() {
    if (!dataset_) {
      std::vector<Dataset> parts;
      parts.reserve(inputs_.size());
      for (const auto& input : inputs_) parts.push_back(parse_csv_file(input, parse_options_));
      dataset_ = parts.size() == 1 ? std::move(parts.front()) : merge_datasets(std::move(parts));
      info("dataset: " + std::to_string(dataset_->records.size()) + " records");
    }
    return *dataset_;
  }

  const ActorLinkGraph& ensure_graph() {
    if (!graph_) {
      BuildGraphOptions opts;
      if (auto it = config_.globals.find("normalize-urls"); it != config_.globals.end())
        opts.normalize_urls = parse_flag(it->second, "normalize-urls");
      graph_ = build_graph(ensure_dataset(), opts);
      info("graph: " + std::to_string(graph_->node_count()) + " nodes, " +
           std::to_string(graph_->edge_count()) + " edges");
    }
    return *graph_;
  }

  void dispatch(const StepDef& step) {
    if (step.name == "ingest") run_ingest(step);
    else if (step.name == "stats") run_stats(step);
    else if (step.name == "graph") run_graph(step);
    else if (step.name == "centrality") run_centrality(step);
    else if (step.name == "components") run_components(step);
    else if (step.name == "communities") run_communities(step);
    else if (step.name == "export") run_export(step);
    else if (step.name == "urlcheck") run_urlcheck(step);
  }

  void run_ingest(const StepDef& step) {
    const Dataset& ds = ensure_dataset();
    write_file(artifact_path(step, "report", "ingest_report.json"), ingest_report_json(ds));
  }

  void run_stats(const StepDef& step) {
    const Dataset& ds = ensure_dataset();
    StatsRequest request;
    std::vector<std::string> which = {"time", "actors", "types", "countries", "words", "links"};
    if (auto it = step.params.find("reports"); it != step.params.end())
      which = split(it->second.value, ',');
    for (const auto& name : which) {
      if (name == "time") request.time = true;
      else if (name == "actors") request.actors = true;
      else if (name == "types") request.types = true;
      else if (name == "countries") request.countries = true;
      else if (name == "words") request.words = true;
      else if (name == "links") request.links = true;
      else if (name == "sponsors") request.sponsors = true;
      else throw ConfigInvalid("unknown report '" + name + "'", step.line, "reports");
    }
    if (auto it = step.params.find("k"); it != step.params.end())
      request.k = parse_u64(it->second, "k");
    if (auto it = step.params.find("bucket"); it != step.params.end()) {
      if (it->second.value == "day") request.bucket = TimeBucket::kDay;
      else if (it->second.value == "week") request.bucket = TimeBucket::kWeek;
      else if (it->second.value == "month") request.bucket = TimeBucket::kMonth;
      else throw ConfigInvalid("expected day/week/month", it->second.line, "bucket");
    }
    if (auto it = step.params.find("stopwords"); it != step.params.end()) {
      request.word_options.stopwords = load_stopwords_file(resolve_ref(it->second.value));
      request.word_options.use_default_stopwords = false;
    }
    if (auto it = step.params.find("word-fields"); it != step.params.end()) {
      request.word_options.fields.clear();
      for (const auto& f : split(it->second.value, ',')) {
        if (f == "message") request.word_options.fields.push_back(TextField::kMessage);
        else if (f == "image_text") request.word_options.fields.push_back(TextField::kImageText);
        else if (f == "title") request.word_options.fields.push_back(TextField::kTitle);
        else if (f == "page_description")
          request.word_options.fields.push_back(TextField::kPageDescription);
        else throw ConfigInvalid("unknown text field '" + f + "'", it->second.line, "word-fields");
      }
    }
    if (auto it = step.params.find("bigrams"); it != step.params.end())
      request.word_options.bigrams = parse_flag(it->second, "bigrams");

    write_file(artifact_path(step, "out", "stats.json"), stats_json(ds, request));

    if (step.params.count("links-csv")) {
      auto ranked = top_links(ds, static_cast<std::size_t>(-1));
      std::vector<RankedLink> links;
      links.reserve(ranked.size());
      for (auto& [url, count] : ranked) links.push_back(RankedLink{url, count});
      std::ostringstream out;
      save_links_csv(links, out);
      write_file(artifact_path(step, "links-csv", "links.csv"), out.str());
    }
    if (step.params.count("words-csv")) {
      WordFrequencyOptions wf = request.word_options;
      wf.k = request.k;
      std::ostringstream out;
      distribution_csv(word_frequency(ds, wf), out);
      write_file(artifact_path(step, "words-csv", "words.csv"), out.str());
    }
  }

  void run_graph(const StepDef& step) {
    const ActorLinkGraph& graph = ensure_graph();
    std::string path = artifact_path(step, "out", "graph.bin");
    save_graph(graph, path);
    artifacts_.push_back(path);
  }

  void run_centrality(const StepDef& step) {
    const ActorLinkGraph& graph = ensure_graph();
    CentralityOptions options;
    options.threads = threads_;
    options.measures = MeasureSet{true, false, false};
    if (auto it = step.params.find("measures"); it != step.params.end()) {
      options.measures = MeasureSet{};
      for (const auto& m : split(it->second.value, ',')) {
        if (m == "degree") options.measures.degree = true;
        else if (m == "closeness") options.measures.closeness = true;
        else if (m == "betweenness") options.measures.betweenness = true;
        else throw ConfigInvalid("unknown measure '" + m + "'", it->second.line, "measures");
      }
    }
    if (auto it = step.params.find("betweenness-mode"); it != step.params.end()) {
      const std::string& v = it->second.value;
      if (v == "exact") {
        options.betweenness_mode.kind = BetweennessKind::kExact;
      } else if (v.starts_with("sampled:")) {
        auto [pivots, seed] = parse_sampled_params(v.substr(8), it->second.line, "betweenness-mode");
        options.betweenness_mode =
            BetweennessMode{BetweennessKind::kSampled, pivots, seed.value_or(seed_)};
        seeds_["centrality.betweenness"] = options.betweenness_mode.seed;
      } else {
        throw ConfigInvalid("expected exact or sampled:<pivots>[:<seed>]", it->second.line,
                            "betweenness-mode");
      }
    }
    CentralityTable table = compute_centralities(graph, options);
    std::size_t top = 0;
    if (auto it = step.params.find("top"); it != step.params.end())
      top = parse_u64(it->second, "top");
    write_file(artifact_path(step, "out", "centrality.json"), centrality_table_json(table, top));

    if (step.params.count("scatter")) {
      std::ostringstream out;
      scatter_export(table, out);
      write_file(artifact_path(step, "scatter", "scatter.csv"), out.str());
    }
  }

  void run_components(const StepDef& step) {
    const ActorLinkGraph& graph = ensure_graph();
    SummaryOptions options;
    options.threads = threads_;
    options.seed = seed_;
    std::size_t top = 10;
    if (auto it = step.params.find("top"); it != step.params.end())
      top = parse_u64(it->second, "top");
    if (auto it = step.params.find("local-n"); it != step.params.end())
      options.local_n = parse_flag(it->second, "local-n");
    if (auto it = step.params.find("distance-mode"); it != step.params.end()) {
      const std::string& v = it->second.value;
      if (v == "exact") {
        options.exact_distance_threshold = UINT32_MAX;
      } else if (v.starts_with("sampled:")) {
        auto [sources, seed] = parse_sampled_params(v.substr(8), it->second.line, "distance-mode");
        options.exact_distance_threshold = 0;
        options.sample_sources = sources;
        options.seed = seed.value_or(seed_);
      } else {
        throw ConfigInvalid("expected exact or sampled:<sources>[:<seed>]", it->second.line,
                            "distance-mode");
      }
    }
    seeds_["components.sampling"] = options.seed;
    write_file(artifact_path(step, "out", "components.json"),
               components_json(top_components_report(graph, top, options)));
  }

  void run_communities(const StepDef& step) {
    const ActorLinkGraph& graph = ensure_graph();
    GirvanNewmanOptions options;
    options.threads = threads_;
    if (auto it = step.params.find("k"); it != step.params.end())
      options.target_k = static_cast<std::uint32_t>(parse_u64(it->second, "k"));
    if (auto it = step.params.find("scope"); it != step.params.end()) {
      if (it->second.value == "largest")
        options.scope = CommunityScope::kLargestComponent;
      else if (it->second.value == "whole")
        options.scope = CommunityScope::kWholeGraph;
      else
        throw ConfigInvalid("expected largest or whole", it->second.line, "scope");
    }
    if (auto it = step.params.find("max-removals"); it != step.params.end())
      options.max_removals = static_cast<std::uint32_t>(parse_u64(it->second, "max-removals"));
    if (auto it = step.params.find("fast"); it != step.params.end()) {
      auto [pivots, seed] = parse_sampled_params(it->second.value, it->second.line, "fast");
      options.fast = {pivots, seed.value_or(seed_)};
      seeds_["communities.fast"] = options.fast->second;
    }
    CommunityPartition partition = girvan_newman(graph, options);
    if (!partition.target_reached) {
      info("communities: target_k not reached (max removals exhausted)");
    }
    write_file(artifact_path(step, "out", "communities.json"),
               communities_json(partition, community_summary(partition, graph), graph));
  }

  void run_export(const StepDef& step) {
    const ActorLinkGraph& graph = ensure_graph();
    std::optional<NodeCommunities> communities;
    if (auto it = step.params.find("communities"); it != step.params.end())
      communities = load_communities_json(resolve_ref(it->second.value), graph);

    std::string format = "gephi-csv";
    if (auto it = step.params.find("format"); it != step.params.end()) format = it->second.value;
    std::string out = artifact_path(step, "out", "gephi");
    if (format == "gephi-csv") {
      GephiFiles files = export_gephi_csv(graph, communities, out);
      artifacts_.push_back(files.nodes_file);
      artifacts_.push_back(files.edges_file);
    } else if (format == "gexf") {
      fs::create_directories(out);
      std::string path = (fs::path(out) / "graph.gexf").string();
      export_gexf(graph, communities, path);
      artifacts_.push_back(path);
    } else {
      throw ConfigInvalid("expected gephi-csv or gexf", step.line, "format");
    }
  }

  void run_urlcheck(const StepDef& step) {
    std::vector<RankedLink> links;
    if (auto it = step.params.find("input"); it != step.params.end()) {
      std::string path = resolve_ref(it->second.value);
      std::ifstream in(path, std::ios::binary);
      if (!in) throw IoFailure("cannot open links file: " + path);
      manifest_.input_digests[path] = hex64(fnv1a64_file(path));
      links = load_links_csv(in);
    } else {
      for (auto& [url, count] : top_links(ensure_dataset(), static_cast<std::size_t>(-1)))
        links.push_back(RankedLink{url, count});
    }
    links = filter_non_facebook(std::move(links));
    std::size_t top = 1000;
    if (auto it = step.params.find("top"); it != step.params.end())
      top = parse_u64(it->second, "top");
    if (links.size() > top) links.resize(top);

    CheckPolicy policy;
    policy.proxy = options_.proxy;
    if (auto it = step.params.find("timeout-ms"); it != step.params.end())
      policy.timeout_ms = static_cast<int>(parse_u64(it->second, "timeout-ms"));
    if (auto it = step.params.find("concurrency"); it != step.params.end())
      policy.concurrency_limit = static_cast<int>(parse_u64(it->second, "concurrency"));
    if (auto it = step.params.find("per-host-delay-ms"); it != step.params.end())
      policy.per_host_delay_ms = static_cast<int>(parse_u64(it->second, "per-host-delay-ms"));
    if (auto it = step.params.find("max-redirects"); it != step.params.end())
      policy.max_redirects = static_cast<int>(parse_u64(it->second, "max-redirects"));

    std::vector<std::string> urls;
    urls.reserve(links.size());
    for (const auto& l : links) urls.push_back(l.url);
    LivenessReport report = check_urls(urls, policy);
    info("urlcheck: " + std::to_string(report.broken) + "/" + std::to_string(report.checked) +
         " broken");
    write_file(artifact_path(step, "out", "liveness.json"), liveness_json(report));
  }

  Config config_;
  std::string config_path_;
  PipelineOptions options_;
  std::ostream& log_;

  std::string outdir_;
  int threads_ = 0;
  std::uint64_t seed_ = 0;
  ParseOptions parse_options_;
  std::vector<std::string> inputs_;

  std::optional<Dataset> dataset_;
  std::optional<ActorLinkGraph> graph_;

  RunManifest manifest_;
  std::map<std::string, std::uint64_t> seeds_;
  std::vector<std::string> artifacts_;
  bool partial_ = false;
};

}  // namespace

PipelineOutcome run_pipeline(const std::string& config_path, const PipelineOptions& options,
                             std::ostream& log) {
  std::ifstream in(config_path);
  if (!in) throw ConfigInvalid("cannot open config file: " + config_path, 0, "config");
  Config config = parse_config(in);
  PipelineRun run(std::move(config), config_path, options, log);
  return run.run();
}

}  // namespace coordnet
