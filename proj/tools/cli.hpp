#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "table.hpp"

namespace chromatic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerify = 3;

/// Bad command-line input detected by the front end itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive range of heights, first >= -1.
struct HeightRange {
  long first = 0;
  long last = 0;
};

/// "a..b" or a single height. Throws UsageError.
HeightRange parse_range(const std::string& text);

/// Everything one command prints: summary fields, a table and notes. All
/// values are strings so that text, CSV and JSON carry identical content.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, std::string>> summary;
  Table table;
  std::vector<std::string> notes;
};

std::string render_text(const Document& d);
/// {"command", "summary": {...}, "columns": [...], "rows": [{column: value}], "notes": [...]}
nlohmann::json to_json(const Document& d);

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chromatic::cli
