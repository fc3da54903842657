#include "csv.hpp"

#include "error.hpp"
#include "util.hpp"

namespace infl::csv {

std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;  // BOM

  while (i < text.size()) {
    Row row;
    row.line = line;
    std::string field;
    bool in_quotes = false;
    bool done = false;
    while (!done) {
      if (i >= text.size()) {
        if (in_quotes) {
          fail(ErrorCode::parse, "line " + std::to_string(row.line) + ": unterminated quoted field");
        }
        row.fields.push_back(std::move(field));
        done = true;
        break;
      }
      char c = text[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          if (!field.empty()) {
            fail(ErrorCode::parse, "line " + std::to_string(line) + ": stray quote in field");
          }
          in_quotes = true;
          ++i;
          break;
        case ',':
          row.fields.push_back(std::move(field));
          field.clear();
          ++i;
          break;
        case '\r':
          ++i;
          break;
        case '\n':
          row.fields.push_back(std::move(field));
          ++line;
          ++i;
          done = true;
          break;
        default:
          field.push_back(c);
          ++i;
      }
    }
    const bool blank = row.fields.size() == 1 && trim(row.fields[0]).empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> read_with_header(const std::string& path,
                                  const std::vector<std::string>& expected_header) {
  auto rows = parse(read_file(path));
  if (rows.empty()) fail(ErrorCode::parse, path + ": missing header row");
  const auto& header = rows.front().fields;
  bool ok = header.size() == expected_header.size();
  for (std::size_t j = 0; ok && j < header.size(); ++j) {
    ok = ascii_lower(trim(header[j])) == expected_header[j];
  }
  if (!ok) {
    fail(ErrorCode::parse, path + ": expected header '" + join(expected_header) + "'");
  }
  rows.erase(rows.begin());
  for (const auto& r : rows) {
    if (r.fields.size() != expected_header.size()) {
      fail(ErrorCode::parse, path + ": line " + std::to_string(r.line) + ": expected " +
                                 std::to_string(expected_header.size()) + " fields, got " +
                                 std::to_string(r.fields.size()));
    }
  }
  return rows;
}

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t j = 0; j < fields.size(); ++j) {
    if (j) out.push_back(',');
    out += quote(fields[j]);
  }
  return out;
}

}  // namespace infl::csv
