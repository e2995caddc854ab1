#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anonkit {

// Every failure mode has its own exception type carrying a process exit
// code; tools/anonkit.cpp maps uncaught errors to that code (see --help).
struct Error : std::runtime_error {
  Error(const std::string& msg, int code) : std::runtime_error(msg), exit_code(code) {}
  int exit_code;
};

struct ConfigError : Error {
  // `path` is a JSON-pointer-style location of the offending field.
  ConfigError(std::string path, const std::string& msg)
      : Error("config error at " + path + ": " + msg, 2), path(std::move(path)) {}
  std::string path;
};

struct ParseError : Error {
  ParseError(std::size_t row, std::string column, std::string cell, const std::string& msg)
      : Error("parse error at row " + std::to_string(row) + ", column \"" + column + "\": " +
                  msg + " (cell: \"" + cell + "\")",
              3),
        row(row),
        column(std::move(column)),
        cell(std::move(cell)) {}
  std::size_t row;  // 1-based data row, header excluded
  std::string column;
  std::string cell;
};

struct SchemaMismatch : Error {
  explicit SchemaMismatch(const std::string& msg) : Error("schema mismatch: " + msg, 4) {}
};

struct HierarchyError : Error {
  explicit HierarchyError(const std::string& msg) : Error("hierarchy error: " + msg, 5) {}
};

struct UnknownColumn : Error {
  explicit UnknownColumn(const std::string& name)
      : Error("unknown column: " + name, 6), name(name) {}
  std::string name;
};

struct KindMismatch : Error {
  explicit KindMismatch(const std::string& msg) : Error("kind mismatch: " + msg, 7) {}
};

struct UncoveredValue : Error {
  explicit UncoveredValue(const std::string& value)
      : Error("value not covered by any group: \"" + value + "\"", 8), value(value) {}
  std::string value;
};

struct LevelOutOfRange : Error {
  LevelOutOfRange(std::size_t level, std::size_t max_level)
      : Error("generalization level " + std::to_string(level) + " exceeds max level " +
                  std::to_string(max_level),
              9) {}
};

struct UnknownValue : Error {
  explicit UnknownValue(const std::string& value)
      : Error("value not in hierarchy domain: \"" + value + "\"", 10), value(value) {}
  std::string value;
};

struct InfeasibleK : Error {
  explicit InfeasibleK(const std::string& msg) : Error("k-anonymity infeasible: " + msg, 11) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("i/o error: " + msg, 12) {}
};

struct EmptyDataset : Error {
  EmptyDataset() : Error("operation requires a nonempty dataset", 13) {}
};

struct InvalidLength : Error {
  explicit InvalidLength(const std::string& msg) : Error("invalid length: " + msg, 14) {}
};

struct NegativeEntropy : Error {
  explicit NegativeEntropy(const std::string& msg) : Error("negative entropy: " + msg, 15) {}
};

}  // namespace anonkit
