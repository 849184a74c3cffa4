#include "support/fixtures.hpp"

#include <sstream>

#include "coordnet/csv.hpp"
#include "coordnet/ingest.hpp"

namespace testsupport {

std::string csv_header_row() {
  std::ostringstream out;
  coordnet::csv::write_record(out, coordnet::schema_headers());
  return out.str();
}

std::string csv_row(const std::map<std::string, std::string>& values) {
  std::vector<std::string> fields;
  fields.reserve(coordnet::schema_headers().size());
  for (const auto& header : coordnet::schema_headers()) {
    auto it = values.find(header);
    fields.push_back(it == values.end() ? std::string{} : it->second);
  }
  std::ostringstream out;
  coordnet::csv::write_record(out, fields);
  return out.str();
}

std::map<std::string, std::string> base_row(const std::string& account, const std::string& date,
                                            const std::string& time) {
  return {
      {"account.name", account},
      {"Post Created Date", date},
      {"Post Created Time", time},
      {"type", "Photo"},
  };
}

}  // namespace testsupport
