#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chromatic/group.hpp"
#include "chromatic/numeric.hpp"

namespace chromatic {

inline constexpr std::size_t kDefaultTupleCap = 10'000'000;

struct CensusOptions {
  /// Maximum number of commuting tuples the naive enumeration may materialize.
  std::size_t tuple_cap = kDefaultTupleCap;
  /// Worker threads for the recursive count (branches over top-level classes).
  unsigned threads = 1;
};

/// Orbits of commuting tuples under simultaneous conjugation.
///
/// For the plain census every entry has p-power order; for the extended
/// census the first entry is unrestricted.
struct TupleCensus {
  FiniteGroup group;
  std::uint64_t prime = 2;
  std::size_t arity = 0;
  bool extended = false;
  /// Total number of commuting tuples enumerated.
  std::size_t tuple_count = 0;
  /// Lexicographically least tuple of each orbit, in increasing order.
  std::vector<std::vector<ElementId>> orbit_reps;
  std::vector<std::size_t> orbit_sizes;
  std::vector<FiniteGroup> centralizers;

  std::size_t orbit_count() const { return orbit_reps.size(); }
};

using ExtendedTupleCensus = TupleCensus;

/// Elements of p-power order (identity included), ascending. Throws NotPrime.
std::vector<ElementId> p_power_elements(const FiniteGroup& g, std::uint64_t p);

/// Brute-force enumeration plus union-find orbit partition. Throws CensusTooLarge.
TupleCensus census_naive(const FiniteGroup& g, std::uint64_t p, std::size_t n,
                         const CensusOptions& options = {});

/// |G \ G_{n,p}| through the centralizer recursion; never materializes tuples.
Integer census_recursive(const FiniteGroup& g, std::uint64_t p, std::size_t n,
                         const CensusOptions& options = {});

/// (n+1)-tuples (x, g_1, ..., g_n), x arbitrary. Throws CensusTooLarge.
ExtendedTupleCensus census_extended(const FiniteGroup& g, std::uint64_t p, std::size_t n,
                                    const CensusOptions& options = {});

/// chi_{K(n)}(BG) for finite G; 1 at n = 0.
Integer chi_kn_finite(const FiniteGroup& g, std::uint64_t p, std::size_t n,
                      const CensusOptions& options = {});

}  // namespace chromatic
