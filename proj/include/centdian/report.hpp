#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "centdian/graph.hpp"

namespace centdian {

// 64-bit FNV-1a over the canonicalized edge list (endpoints normalized,
// edges sorted); stable identity for instances across runs and formats.
std::string instance_digest(const Graph& g);

// Flat ordered report. Fields render in insertion order in both formats
// and numbers carry at most 12 significant digits, so identical runs
// produce byte-identical output.
class Report {
 public:
  void add_str(std::string key, std::string value);
  void add_num(std::string key, Scalar value);
  void add_int(std::string key, std::int64_t value);
  void add_count(std::string key, std::uint64_t value);
  void add_flag(std::string key, bool value);
  void add_set(std::string key, VertexSet value);
  void add_rows(std::string key, std::vector<Report> rows);
  void add_check(std::string name, bool ok);

  std::string json() const;
  std::string text() const;

 private:
  using Value = std::variant<std::string, Scalar, std::int64_t,
                             std::uint64_t, bool, VertexSet,
                             std::vector<Report>>;
  std::vector<std::pair<std::string, Value>> fields_;
  std::vector<std::pair<std::string, bool>> checks_;
};

}  // namespace centdian
