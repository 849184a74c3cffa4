#include "coordnet/csv.hpp"

#include "coordnet/error.hpp"

namespace coordnet::csv {

namespace {
constexpr std::size_t kChunk = 1 << 16;
}

int Reader::get() {
  if (pos_ >= buf_.size()) {
    buf_.resize(kChunk);
    in_.read(buf_.data(), static_cast<std::streamsize>(kChunk));
    buf_.resize(static_cast<std::size_t>(in_.gcount()));
    pos_ = 0;
    if (buf_.empty()) return -1;
  }
  return static_cast<unsigned char>(buf_[pos_++]);
}

int Reader::peek() {
  int c = get();
  if (c >= 0) --pos_;
  return c;
}

bool Reader::next(std::vector<std::string>& fields) {
  fields.clear();

  // Skip blank lines between records.
  for (;;) {
    int c = peek();
    if (c < 0) return false;
    if (c == '\n') {
      get();
      ++line_;
      continue;
    }
    if (c == '\r') {
      get();
      if (peek() == '\n') get();
      ++line_;
      continue;
    }
    break;
  }

  record_line_ = line_;
  std::string field;
  bool in_quotes = false;
  bool quoted_field = false;

  for (;;) {
    int ci = get();
    if (ci < 0) {
      if (in_quotes) throw MalformedCsv("unbalanced quote (file truncated inside quoted field)", record_line_);
      fields.push_back(std::move(field));
      return true;
    }
    char c = static_cast<char>(ci);

    if (in_quotes) {
      if (c == '"') {
        if (peek() == '"') {
          get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }

    switch (c) {
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        break;
      case '\r':
        if (peek() == '\n') get();
        [[fallthrough]];
      case '\n':
        ++line_;
        fields.push_back(std::move(field));
        return true;
      case '"':
        if (field.empty() && !quoted_field) {
          in_quotes = true;
          quoted_field = true;
        } else if (quoted_field) {
          throw MalformedCsv("character after closing quote", record_line_);
        } else {
          field.push_back(c);  // tolerate a stray quote mid-field
        }
        break;
      default:
        if (quoted_field) throw MalformedCsv("character after closing quote", record_line_);
        field.push_back(c);
        break;
    }
  }
}

std::string escape(std::string_view field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_field(std::ostream& out, std::string_view field) { out << escape(field); }

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    write_field(out, fields[i]);
  }
  out.put('\n');
}

}  // namespace coordnet::csv
