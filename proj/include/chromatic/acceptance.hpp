#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chromatic/cells.hpp"

namespace chromatic::acceptance {

struct Criterion {
  int number = 0;
  /// Filter key, e.g. "ladder".
  std::string key;
  std::string title;
  /// Where the expected values come from.
  std::string basis;
};

const std::vector<Criterion>& criteria();

struct Options {
  /// Keys or numbers; empty runs everything. Unknown entries throw InvalidArgument.
  std::vector<std::string> filter;
  /// Replaces the built-in Soule complex in the SL3 check.
  std::optional<ProperCellStructure> soule;
  unsigned threads = 1;
};

struct Result {
  Criterion criterion;
  std::size_t checks = 0;
  /// "what: expected X, got Y"
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

std::vector<Result> run(const Options& options);

/// One PASS/FAIL line per criterion, failures indented beneath. Timings make
/// the output nondeterministic, so they are opt-in.
void print(std::ostream& out, const std::vector<Result>& results, bool timings = false);

bool all_passed(const std::vector<Result>& results);

}  // namespace chromatic::acceptance
