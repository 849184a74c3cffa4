#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace coordnet::csv {

// RFC-4180 record reader. Quoted fields may contain commas, quotes ("")
// and embedded newlines. Throws MalformedCsv on an unbalanced quote or a
// stray character after a closing quote.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Fills `fields` with the next record; returns false at end of input.
  // Blank lines are skipped.
  bool next(std::vector<std::string>& fields);

  // 1-based input line on which the last returned record started.
  std::size_t record_line() const { return record_line_; }

 private:
  int get();
  int peek();

  std::istream& in_;
  std::string buf_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 1;
};

void write_field(std::ostream& out, std::string_view field);
void write_record(std::ostream& out, const std::vector<std::string>& fields);

std::string escape(std::string_view field);

}  // namespace coordnet::csv
