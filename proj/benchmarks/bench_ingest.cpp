#include <benchmark/benchmark.h>

#include <sstream>

#include "coordnet/ingest.hpp"
#include "support/fixtures.hpp"

using namespace coordnet;

namespace {

std::string make_export_csv(int rows) {
  std::string text = testsupport::csv_header_row();
  for (int i = 0; i < rows; ++i) {
    auto row = testsupport::base_row("Page " + std::to_string(i % 500), "2021-03-04", "10:11:12");
    row["message"] = "some message text with, commas and \"quotes\" inside";
    row["expandedLinks.original"] = "https://example.test/article-" + std::to_string(i % 2000);
    row["statistics.actual.likeCount"] = std::to_string(i % 100);
    row["Page Admin Top Country"] = "IN";
    text += testsupport::csv_row(row);
  }
  return text;
}

}  // namespace

static void BM_ParseCsv(benchmark::State& state) {
  std::string text = make_export_csv(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::istringstream in(text);
    Dataset ds = parse_csv(in);
    benchmark::DoNotOptimize(ds.records.size());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseCsv)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_SerializeCsv(benchmark::State& state) {
  std::string text = make_export_csv(static_cast<int>(state.range(0)));
  std::istringstream in(text);
  Dataset ds = parse_csv(in);
  for (auto _ : state) {
    std::ostringstream out;
    serialize_csv(ds, out);
    benchmark::DoNotOptimize(out.str().size());
  }
}
BENCHMARK(BM_SerializeCsv)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);
