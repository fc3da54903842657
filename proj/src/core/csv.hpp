#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace infl::csv {

struct Row {
  std::size_t line;  // 1-based line number where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 style: comma separated, double-quoted fields may contain commas,
// quotes ("") and newlines. A trailing empty line is ignored.
std::vector<Row> parse(std::string_view text);

// Parses the file and checks that the header row equals `expected_header`
// (case-insensitive, surrounding whitespace ignored). Returns the data rows.
std::vector<Row> read_with_header(const std::string& path,
                                  const std::vector<std::string>& expected_header);

std::string quote(std::string_view field);
std::string join(const std::vector<std::string>& fields);

}  // namespace infl::csv
