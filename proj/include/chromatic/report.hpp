#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromatic/census.hpp"
#include "chromatic/closed_forms.hpp"
#include "chromatic/coxeter.hpp"
#include "chromatic/numeric.hpp"

namespace chromatic {

/// `count` summands H^*(BC; L(E^*)) sharing one centralizer description.
struct ReportSummand {
  std::string centralizer;
  Integer count;
  /// Ranks over L(E^*) of one summand; absent when the rational cohomology
  /// of the centralizer is not part of the input data.
  std::optional<Integer> even_rank;
  std::optional<Integer> odd_rank;
  /// even_rank - odd_rank of one summand, i.e. chi_Q(BC).
  Rational euler;
};

/// Rank bookkeeping for the character decomposition at height n.
struct CharacterReport {
  std::string target;
  std::uint64_t prime = 2;
  std::size_t height = 0;
  Integer summand_count;
  std::vector<ReportSummand> summands;
  Rational chi_kn;
  std::vector<std::string> notes;
};

/// One summand per orbit of G_{n,p}, grouped by centralizer isomorphism type.
CharacterReport character_report(const FiniteGroup& g, std::uint64_t p, std::size_t n,
                                 const CensusOptions& options = {});
/// One summand per orbit of W_{n,2}, grouped by spherical subset size.
CharacterReport character_report(const Graph& l, std::size_t n, const std::string& label = "W(L)");
CharacterReport character_report(const ClosedFormTarget& target, std::size_t n);

nlohmann::json to_json(const CharacterReport& r);

}  // namespace chromatic
