#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coordnet {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MalformedCsv : public Error {
 public:
  MalformedCsv(const std::string& detail, std::size_t line)
      : Error("malformed CSV at line " + std::to_string(line) + ": " + detail),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SchemaMismatch : public Error {
 public:
  explicit SchemaMismatch(std::vector<std::string> missing)
      : Error(make_message(missing)), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing_headers() const { return missing_; }

 private:
  static std::string make_message(const std::vector<std::string>& missing) {
    std::string msg = "required headers absent:";
    for (const auto& h : missing) msg += " '" + h + "'";
    return msg;
  }
  std::vector<std::string> missing_;
};

class EmptyGraph : public Error {
 public:
  explicit EmptyGraph(const std::string& what) : Error(what) {}
};

class SingleNode : public Error {
 public:
  SingleNode() : Error("graph has a single node; centrality undefined") {}
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& what) : Error(what) {}
};

class PivotsExceedNodes : public Error {
 public:
  PivotsExceedNodes(std::size_t pivots, std::size_t nodes)
      : Error("requested " + std::to_string(pivots) + " pivots on a graph with " +
              std::to_string(nodes) + " nodes") {}
};

class ColumnNotComputed : public Error {
 public:
  explicit ColumnNotComputed(const std::string& column)
      : Error("centrality column not computed: " + column) {}
};

class DisconnectedInput : public Error {
 public:
  explicit DisconnectedInput(const std::string& what) : Error(what) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

class ConfigInvalid : public Error {
 public:
  ConfigInvalid(const std::string& detail, std::size_t line, const std::string& field = "")
      : Error("config line " + std::to_string(line) +
              (field.empty() ? "" : " field '" + field + "'") + ": " + detail),
        line_(line),
        field_(field) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class IoFailure : public Error {
 public:
  explicit IoFailure(const std::string& what) : Error(what) {}
};

}  // namespace coordnet
