#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polydisc {

/// One line of output: space-separated key=value fields in insertion order.
/// Keys use [A-Za-z0-9_.-]. Values are written bare when they contain only
/// printable characters other than space, '"', '\\' and '='; otherwise they
/// are double-quoted with \" \\ \n \t escapes.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value);
  /// Null when absent.
  const std::string* get(std::string_view key) const;

  friend bool operator==(const Record& a, const Record& b) { return a.fields == b.fields; }
};

std::string serialize(const Record& r);
/// Throws ParseError on malformed input.
Record parse_record(std::string_view line);

}  // namespace polydisc
