// coordnet: batch CLI for actor/shared-link network analysis over
// CrowdTangle-style post exports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coordnet/communities.hpp"
#include "coordnet/components.hpp"
#include "coordnet/error.hpp"
#include "coordnet/export.hpp"
#include "coordnet/graph.hpp"
#include "coordnet/ingest.hpp"
#include "coordnet/metrics.hpp"
#include "coordnet/pipeline.hpp"
#include "coordnet/report_json.hpp"
#include "coordnet/stats.hpp"
#include "coordnet/urlcheck.hpp"
#include "coordnet/version.hpp"

namespace {

using namespace coordnet;

struct GlobalFlags {
  int threads = 0;
  std::uint64_t seed = 0;
  bool quiet = false;
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoFailure("cannot open output file: " + out_path);
  out << content;
  if (!out) throw IoFailure("failed writing " + out_path);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (i > start) out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

ParseOptions make_parse_options(bool lenient, const std::string& date_format) {
  ParseOptions options;
  options.mode = lenient ? SchemaMode::kLenient : SchemaMode::kStrict;
  if (date_format == "dmy")
    options.date_format = DateFormat::kDmy;
  else if (date_format == "iso")
    options.date_format = DateFormat::kIso;
  else
    throw Error("--date-format must be iso or dmy");
  return options;
}

Dataset load_inputs(const std::vector<std::string>& files, const ParseOptions& options) {
  std::vector<Dataset> parts;
  parts.reserve(files.size());
  for (const auto& f : files) parts.push_back(parse_csv_file(f, options));
  return parts.size() == 1 ? std::move(parts.front()) : merge_datasets(std::move(parts));
}

std::pair<std::uint32_t, std::uint64_t> parse_pivot_seed(const std::string& text,
                                                         std::uint64_t default_seed) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.empty() || parts.size() > 2 || parts[0].empty())
    throw Error("expected <pivots>[:<seed>]");
  return {static_cast<std::uint32_t>(std::stoull(parts[0])),
          parts.size() == 2 ? std::stoull(parts[1]) : default_seed};
}

BetweennessMode parse_betweenness_mode(const std::string& text, std::uint64_t default_seed) {
  if (text == "exact") return BetweennessMode{};
  if (text.rfind("sampled:", 0) == 0) {
    auto [pivots, seed] = parse_pivot_seed(text.substr(8), default_seed);
    return BetweennessMode{BetweennessKind::kSampled, pivots, seed};
  }
  throw Error("--betweenness-mode must be exact or sampled:<pivots>[:<seed>]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coordnet: actor/shared-link network analysis toolkit"};
  app.set_version_flag("--version", std::string("coordnet ") + kVersion);
  app.require_subcommand(1);

  GlobalFlags globals;
  app.add_option("--threads", globals.threads, "Worker threads (0 = auto)");
  app.add_option("--seed", globals.seed, "Default seed for sampled estimators");
  app.add_flag("--quiet", globals.quiet, "Suppress progress logging");

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  // ingest
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse CSV exports into a validated dataset");
  std::vector<std::string> ingest_files;
  bool ingest_lenient = false, ingest_strict = false;
  std::string ingest_date_format = "iso", ingest_report;
  ingest_cmd->add_option("files", ingest_files, "CSV export files")->required()->expected(-1);
  ingest_cmd->add_flag("--strict", ingest_strict, "Reject rows with malformed optional fields");
  ingest_cmd->add_flag("--lenient", ingest_lenient, "Degrade malformed optional fields to absent");
  ingest_cmd->add_option("--date-format", ingest_date_format, "iso | dmy");
  ingest_cmd->add_option("--report", ingest_report, "Write the ingest report JSON here");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Descriptive dataset statistics");
  std::vector<std::string> stats_inputs;
  std::string stats_reports = "time,actors,types,countries,words,links";
  std::size_t stats_k = 50;
  std::string stats_stopwords, stats_bucket = "month", stats_out;
  std::string stats_word_fields = "message", stats_links_csv, stats_words_csv;
  bool stats_bigrams = false, stats_lenient = false;
  std::string stats_date_format = "iso";
  stats_cmd->add_option("--input", stats_inputs, "Input CSV export(s)")->required();
  stats_cmd->add_option("--report", stats_reports,
                        "Comma list: time,actors,types,countries,words,links,sponsors");
  stats_cmd->add_option("--k", stats_k, "Top-k cutoff for ranked reports");
  stats_cmd->add_option("--stopwords", stats_stopwords, "Stopword file (one word per line)");
  stats_cmd->add_option("--bucket", stats_bucket, "Histogram bucket: day | week | month");
  stats_cmd->add_option("--word-fields", stats_word_fields,
                        "message,image_text,title,page_description");
  stats_cmd->add_flag("--bigrams", stats_bigrams, "Count adjacent word pairs instead of unigrams");
  stats_cmd->add_option("--links-csv", stats_links_csv, "Also write ranked links as CSV");
  stats_cmd->add_option("--words-csv", stats_words_csv, "Also write word weights as CSV");
  stats_cmd->add_flag("--lenient", stats_lenient, "Lenient ingest mode");
  stats_cmd->add_option("--date-format", stats_date_format, "iso | dmy");
  stats_cmd->add_option("--out", stats_out, "Output JSON path (default: stdout)");

  // graph build
  auto* graph_cmd = app.add_subcommand("graph", "Graph construction");
  auto* graph_build = graph_cmd->add_subcommand("build", "Build the actor/link graph snapshot");
  std::vector<std::string> graph_inputs;
  std::string graph_out = "graph.bin", graph_date_format = "iso";
  bool graph_normalize = false, graph_lenient = false;
  graph_build->add_option("--input", graph_inputs, "Input CSV export(s)")->required();
  graph_build->add_option("--out", graph_out, "Snapshot output path");
  graph_build->add_flag("--normalize-urls", graph_normalize,
                        "Lowercase scheme+host before interning link labels");
  graph_build->add_flag("--lenient", graph_lenient, "Lenient ingest mode");
  graph_build->add_option("--date-format", graph_date_format, "iso | dmy");

  // centrality
  auto* centrality_cmd = app.add_subcommand("centrality", "Per-node centrality table");
  std::string centrality_graph, centrality_measures = "degree";
  std::string centrality_mode = "exact", centrality_out, centrality_scatter;
  std::size_t centrality_top = 0;
  centrality_cmd->add_option("--graph", centrality_graph, "Graph snapshot")->required();
  centrality_cmd->add_option("--measures", centrality_measures, "degree,closeness,betweenness");
  centrality_cmd->add_option("--betweenness-mode", centrality_mode,
                             "exact | sampled:<pivots>[:<seed>]");
  centrality_cmd->add_option("--top", centrality_top, "Emit only the k best rows (0 = all)");
  centrality_cmd->add_option("--scatter", centrality_scatter,
                             "Write a degree vs degree-centrality scatter file");
  centrality_cmd->add_option("--out", centrality_out, "Output JSON path (default: stdout)");

  // components
  auto* components_cmd = app.add_subcommand("components", "Connected component summaries");
  std::string components_graph, components_mode, components_out;
  std::size_t components_top = 10;
  bool components_local_n = false;
  components_cmd->add_option("--graph", components_graph, "Graph snapshot")->required();
  components_cmd->add_option("--top", components_top, "Summarize the k largest components");
  components_cmd->add_option("--distance-mode", components_mode,
                             "exact | sampled:<sources>[:<seed>]");
  components_cmd->add_flag("--local-n", components_local_n,
                           "Degree-centrality denominator from the component, not the graph");
  components_cmd->add_option("--out", components_out, "Output JSON path (default: stdout)");

  // communities
  auto* communities_cmd = app.add_subcommand("communities", "Girvan-Newman community detection");
  std::string communities_graph, communities_scope = "largest", communities_fast, communities_out;
  std::uint32_t communities_k = 5;
  std::uint32_t communities_max_removals = 0;
  communities_cmd->add_option("--graph", communities_graph, "Graph snapshot")->required();
  communities_cmd->add_option("--k", communities_k, "Target community count");
  communities_cmd->add_option("--scope", communities_scope, "largest | whole");
  communities_cmd->add_option("--fast", communities_fast,
                              "Sampled edge betweenness: <pivots>[:<seed>]");
  communities_cmd->add_option("--max-removals", communities_max_removals,
                              "Stop after this many removals (0 = edge count)");
  communities_cmd->add_option("--out", communities_out, "Output JSON path (default: stdout)");

  // urlcheck
  auto* urlcheck_cmd = app.add_subcommand("urlcheck", "Audit liveness of shared links");
  std::string urlcheck_input, urlcheck_out;
  std::size_t urlcheck_top = 1000;
  int urlcheck_timeout = 10000, urlcheck_concurrency = 32, urlcheck_delay = 250,
      urlcheck_redirects = 5;
  urlcheck_cmd->add_option("--input", urlcheck_input, "Ranked links CSV (url,count)")->required();
  urlcheck_cmd->add_option("--top", urlcheck_top, "Check the k most shared non-Facebook links");
  urlcheck_cmd->add_option("--timeout-ms", urlcheck_timeout, "Per-request timeout");
  urlcheck_cmd->add_option("--concurrency", urlcheck_concurrency, "Global in-flight cap");
  urlcheck_cmd->add_option("--per-host-delay-ms", urlcheck_delay,
                           "Minimum spacing between requests to one host");
  urlcheck_cmd->add_option("--max-redirects", urlcheck_redirects, "Redirect hop cap");
  urlcheck_cmd->add_option("--out", urlcheck_out, "Output JSON path (default: stdout)");

  // export
  auto* export_cmd = app.add_subcommand("export", "Gephi-compatible graph files");
  std::string export_graph, export_communities, export_format = "gephi-csv", export_out;
  export_cmd->add_option("--graph", export_graph, "Graph snapshot")->required();
  export_cmd->add_option("--communities", export_communities, "communities.json for the partition");
  export_cmd->add_option("--format", export_format, "gephi-csv | gexf");
  export_cmd->add_option("--out", export_out, "Output directory")->required();

  // run
  auto* run_cmd = app.add_subcommand("run", "Execute a pipeline config");
  std::string run_config;
  run_cmd->add_option("config", run_config, "Pipeline config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest_cmd) {
      if (ingest_strict && ingest_lenient) throw Error("--strict and --lenient are exclusive");
      Dataset ds = load_inputs(ingest_files, make_parse_options(ingest_lenient, ingest_date_format));
      emit(ingest_report_json(ds), ingest_report);
      if (!globals.quiet)
        std::cerr << "[coordnet] accepted " << ds.report.rows_accepted << " of "
                  << ds.report.rows_read << " rows\n";
    } else if (*stats_cmd) {
      Dataset ds = load_inputs(stats_inputs, make_parse_options(stats_lenient, stats_date_format));
      StatsRequest request;
      for (const auto& name : split_list(stats_reports)) {
        if (name == "time") request.time = true;
        else if (name == "actors") request.actors = true;
        else if (name == "types") request.types = true;
        else if (name == "countries") request.countries = true;
        else if (name == "words") request.words = true;
        else if (name == "links") request.links = true;
        else if (name == "sponsors") request.sponsors = true;
        else throw Error("unknown report: " + name);
      }
      request.k = stats_k;
      if (stats_bucket == "day") request.bucket = TimeBucket::kDay;
      else if (stats_bucket == "week") request.bucket = TimeBucket::kWeek;
      else if (stats_bucket == "month") request.bucket = TimeBucket::kMonth;
      else throw Error("--bucket must be day, week or month");
      if (!stats_stopwords.empty()) {
        request.word_options.stopwords = load_stopwords_file(stats_stopwords);
        request.word_options.use_default_stopwords = false;
      }
      request.word_options.bigrams = stats_bigrams;
      request.word_options.fields.clear();
      for (const auto& f : split_list(stats_word_fields)) {
        if (f == "message") request.word_options.fields.push_back(TextField::kMessage);
        else if (f == "image_text") request.word_options.fields.push_back(TextField::kImageText);
        else if (f == "title") request.word_options.fields.push_back(TextField::kTitle);
        else if (f == "page_description")
          request.word_options.fields.push_back(TextField::kPageDescription);
        else throw Error("unknown word field: " + f);
      }
      emit(stats_json(ds, request), stats_out);
      if (!stats_links_csv.empty()) {
        std::vector<RankedLink> links;
        for (auto& [url, count] : top_links(ds, static_cast<std::size_t>(-1)))
          links.push_back(RankedLink{url, count});
        std::ostringstream out;
        save_links_csv(links, out);
        emit(out.str(), stats_links_csv);
      }
      if (!stats_words_csv.empty()) {
        WordFrequencyOptions wf = request.word_options;
        wf.k = request.k;
        std::ostringstream out;
        distribution_csv(word_frequency(ds, wf), out);
        emit(out.str(), stats_words_csv);
      }
    } else if (*graph_build) {
      Dataset ds = load_inputs(graph_inputs, make_parse_options(graph_lenient, graph_date_format));
      BuildGraphOptions options;
      options.normalize_urls = graph_normalize;
      ActorLinkGraph graph = build_graph(ds, options);
      save_graph(graph, graph_out);
      if (!globals.quiet)
        std::cerr << "[coordnet] graph: " << graph.node_count() << " nodes, " << graph.edge_count()
                  << " edges, avg degree " << graph.average_degree() << "\n";
    } else if (*centrality_cmd) {
      ActorLinkGraph graph = load_graph(centrality_graph);
      CentralityOptions options;
      options.threads = globals.threads;
      options.measures = MeasureSet{};
      for (const auto& m : split_list(centrality_measures)) {
        if (m == "degree") options.measures.degree = true;
        else if (m == "closeness") options.measures.closeness = true;
        else if (m == "betweenness") options.measures.betweenness = true;
        else throw Error("unknown measure: " + m);
      }
      options.betweenness_mode = parse_betweenness_mode(centrality_mode, globals.seed);
      CentralityTable table = compute_centralities(graph, options);
      emit(centrality_table_json(table, centrality_top), centrality_out);
      if (!centrality_scatter.empty()) {
        std::ostringstream out;
        scatter_export(table, out);
        emit(out.str(), centrality_scatter);
      }
    } else if (*components_cmd) {
      ActorLinkGraph graph = load_graph(components_graph);
      SummaryOptions options;
      options.threads = globals.threads;
      options.seed = globals.seed;
      options.local_n = components_local_n;
      if (!components_mode.empty() && components_mode != "exact") {
        if (components_mode.rfind("sampled:", 0) != 0)
          throw Error("--distance-mode must be exact or sampled:<sources>[:<seed>]");
        auto [sources, seed] = parse_pivot_seed(components_mode.substr(8), globals.seed);
        options.exact_distance_threshold = 0;
        options.sample_sources = sources;
        options.seed = seed;
      } else if (components_mode == "exact") {
        options.exact_distance_threshold = UINT32_MAX;
      }
      emit(components_json(top_components_report(graph, components_top, options)), components_out);
    } else if (*communities_cmd) {
      ActorLinkGraph graph = load_graph(communities_graph);
      GirvanNewmanOptions options;
      options.threads = globals.threads;
      options.target_k = communities_k;
      options.max_removals = communities_max_removals;
      if (communities_scope == "largest")
        options.scope = CommunityScope::kLargestComponent;
      else if (communities_scope == "whole")
        options.scope = CommunityScope::kWholeGraph;
      else
        throw Error("--scope must be largest or whole");
      if (!communities_fast.empty()) options.fast = parse_pivot_seed(communities_fast, globals.seed);
      CommunityPartition partition = girvan_newman(graph, options);
      if (!partition.target_reached && !globals.quiet)
        std::cerr << "[coordnet] warning: target community count not reached\n";
      emit(communities_json(partition, community_summary(partition, graph), graph),
           communities_out);
    } else if (*urlcheck_cmd) {
      std::ifstream in(urlcheck_input, std::ios::binary);
      if (!in) throw IoFailure("cannot open links file: " + urlcheck_input);
      std::vector<RankedLink> links = filter_non_facebook(load_links_csv(in));
      if (links.size() > urlcheck_top) links.resize(urlcheck_top);
      CheckPolicy policy;
      policy.timeout_ms = urlcheck_timeout;
      policy.concurrency_limit = urlcheck_concurrency;
      policy.per_host_delay_ms = urlcheck_delay;
      policy.max_redirects = urlcheck_redirects;
      if (const char* proxy = std::getenv("COORDNET_PROXY")) policy.proxy = proxy;
      std::vector<std::string> urls;
      urls.reserve(links.size());
      for (const auto& l : links) urls.push_back(l.url);
      LivenessReport report = check_urls(urls, policy);
      emit(liveness_json(report), urlcheck_out);
      if (!globals.quiet)
        std::cerr << "[coordnet] " << report.broken << "/" << report.checked << " broken\n";
    } else if (*export_cmd) {
      ActorLinkGraph graph = load_graph(export_graph);
      std::optional<NodeCommunities> communities;
      if (!export_communities.empty())
        communities = load_communities_json(export_communities, graph);
      if (export_format == "gephi-csv") {
        export_gephi_csv(graph, communities, export_out);
      } else if (export_format == "gexf") {
        std::filesystem::create_directories(export_out);
        export_gexf(graph, communities,
                    (std::filesystem::path(export_out) / "graph.gexf").string());
      } else {
        throw Error("--format must be gephi-csv or gexf");
      }
    } else if (*run_cmd) {
      PipelineOptions options;
      options.command_line = command_line;
      options.threads = globals.threads;
      options.default_seed = globals.seed;
      options.quiet = globals.quiet;
      if (const char* proxy = std::getenv("COORDNET_PROXY")) options.proxy = proxy;
      PipelineOutcome outcome = run_pipeline(run_config, options, std::cerr);
      return outcome.exit_code;
    }
  } catch (const Error& e) {
    std::cerr << "coordnet: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "coordnet: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
