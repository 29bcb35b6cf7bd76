#pragma once

#include <string>
#include <vector>

namespace chromatic::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void add(std::vector<std::string> row);
};

/// Left-aligned columns separated by two spaces, with a dashed rule under the header.
std::string render_text(const Table& t);
/// RFC 4180 quoting: fields containing a comma, quote or newline are quoted.
std::string render_csv(const Table& t);
std::string csv_field(const std::string& field);

}  // namespace chromatic::cli
