#include "doctest.h"

#include "chromatic/census.hpp"
#include "chromatic/error.hpp"
#include "oracles/oracles.hpp"

using namespace chromatic;

namespace {

std::vector<FiniteGroup> corpus(std::size_t max_order = 48) {
  std::vector<FiniteGroup> out;
  for (const auto& spec : standard_corpus()) {
    FiniteGroup g = standard_group(spec).with_name(spec);
    if (g.order() <= max_order) out.push_back(g);
  }
  return out;
}

Integer count(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

bool is_p_power(std::size_t k, std::uint64_t p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

}  // namespace

TEST_CASE("p-power elements") {
  const FiniteGroup s3 = standard_group("S3");
  CHECK(p_power_elements(s3, 3).size() == 3);
  CHECK(p_power_elements(s3, 2).size() == 4);
  CHECK(p_power_elements(FiniteGroup(), 7) == std::vector<ElementId>{0});
  CHECK(p_power_elements(standard_group("D8"), 2).size() == 8);
  CHECK(p_power_elements(standard_group("C6"), 5).size() == 1);
  CHECK_THROWS_AS(p_power_elements(s3, 4), NotPrime);
  CHECK_THROWS_AS(p_power_elements(s3, 1), NotPrime);
  CHECK_THROWS_AS(p_power_elements(s3, 0), NotPrime);
}

TEST_CASE("naive census examples") {
  CHECK(census_naive(standard_group("S3"), 3, 1).orbit_count() == 2);
  CHECK(census_naive(standard_group("D8"), 2, 1).orbit_count() == 5);
  CHECK(census_naive(standard_group("S4"), 2, 1).orbit_count() == 4);
  CHECK(census_naive(standard_group("D8"), 2, 2).orbit_count() == 22);
  CHECK(census_naive(standard_group("C1"), 2, 5).orbit_count() == 1);
}

TEST_CASE("recursive census examples") {
  CHECK(census_recursive(standard_group("S3"), 3, 2) == 5);
  CHECK(census_recursive(standard_group("D12"), 2, 3) == 64);
  CHECK(census_recursive(standard_group("C2"), 3, 4) == 1);
  CHECK(chi_kn_finite(standard_group("S4"), 2, 0) == 1);
  // Far beyond the naive cap.
  CHECK(census_recursive(standard_group("C2xC2xC2"), 2, 10) == ipow(Integer(8), 10));
}

TEST_CASE("abelian groups give |H_(p)|^n") {
  for (const FiniteGroup& g : corpus())
    if (g.is_abelian())
      for (std::uint64_t p : {2, 3, 5})
        for (std::size_t n = 0; n <= 4; ++n)
          CHECK(census_recursive(g, p, n) == ipow(count(p_power_elements(g, p).size()), n));
}

TEST_CASE("arity zero has one orbit, the empty tuple") {
  for (const FiniteGroup& g : corpus()) {
    const TupleCensus c = census_naive(g, 2, 0);
    CHECK(c.orbit_count() == 1);
    CHECK(c.orbit_reps[0].empty());
    CHECK(c.centralizers[0].order() == g.order());
    CHECK(census_recursive(g, 3, 0) == 1);
  }
}

TEST_CASE("census representatives and orbit data are consistent") {
  for (const FiniteGroup& g : corpus(24)) {
    for (std::uint64_t p : {2, 3}) {
      for (std::size_t n = 1; n <= 2; ++n) {
        CAPTURE(g.name());
        const TupleCensus c = census_naive(g, p, n);
        std::size_t total = 0;
        for (std::size_t i = 0; i < c.orbit_count(); ++i) {
          const auto& t = c.orbit_reps[i];
          REQUIRE(t.size() == n);
          for (ElementId x : t) CHECK(is_p_power(g.element_order(x), p));
          for (ElementId a : t)
            for (ElementId b : t) CHECK(g.commute(a, b));
          CHECK(c.orbit_sizes[i] * c.centralizers[i].order() == g.order());
          const auto cent = centralizer_ids(g, std::span<const ElementId>(t));
          CHECK(cent.size() == c.centralizers[i].order());
          total += c.orbit_sizes[i];
        }
        CHECK(total == c.tuple_count);
        CHECK(std::is_sorted(c.orbit_reps.begin(), c.orbit_reps.end()));
      }
    }
  }
}

TEST_CASE("representatives are the least tuple of their orbit") {
  const FiniteGroup g = standard_group("D8");
  const TupleCensus c = census_naive(g, 2, 2);
  for (const auto& t : c.orbit_reps)
    for (ElementId h = 0; h < g.order(); ++h) {
      std::vector<ElementId> moved;
      for (ElementId x : t) moved.push_back(g.conjugate(x, h));
      CHECK_FALSE(moved < t);
    }
}

TEST_CASE("naive, recursive and Burnside-lemma counts agree") {
  for (const FiniteGroup& g : corpus()) {
    for (std::uint64_t p : {2, 3, 5}) {
      for (std::size_t n = 0; n <= 3; ++n) {
        CAPTURE(g.name());
        CAPTURE(p);
        CAPTURE(n);
        const Integer naive = count(census_naive(g, p, n).orbit_count());
        CHECK(census_recursive(g, p, n) == naive);
        CHECK(oracle::commuting_orbits_by_burnside(g, p, n) == naive);
      }
    }
  }
}

TEST_CASE("threaded recursion matches the sequential count") {
  CensusOptions threaded;
  threaded.threads = 4;
  for (const char* spec : {"S4xC2", "S3xS3", "D24", "Q8xC3"})
    for (std::uint64_t p : {2, 3})
      for (std::size_t n = 1; n <= 4; ++n)
        CHECK(census_recursive(standard_group(spec), p, n, threaded) == census_recursive(standard_group(spec), p, n));
}

TEST_CASE("Kunneth law for direct products") {
  const auto small = corpus(8);
  for (const FiniteGroup& g : small)
    for (const FiniteGroup& h : small)
      for (std::uint64_t p : {2, 3})
        for (std::size_t n = 1; n <= 2; ++n)
          CHECK(chi_kn_finite(direct_product(g, h), p, n) == chi_kn_finite(g, p, n) * chi_kn_finite(h, p, n));
}

TEST_CASE("orbit count is monotone in the arity") {
  for (const FiniteGroup& g : corpus())
    for (std::uint64_t p : {2, 3})
      for (std::size_t n = 0; n < 4; ++n) CHECK(census_recursive(g, p, n + 1) >= census_recursive(g, p, n));
}

TEST_CASE("class equation and extended census") {
  const FiniteGroup s3 = standard_group("S3");
  const ExtendedTupleCensus e = census_extended(s3, 3, 1);
  CHECK(e.extended);
  CHECK(e.arity == 1);
  CHECK(e.tuple_count == 12);
  CHECK(e.tuple_count / s3.order() == census_naive(s3, 3, 1).orbit_count());
  for (const auto& t : e.orbit_reps) CHECK(t.size() == 2);

  for (const FiniteGroup& g : corpus(24)) {
    for (std::uint64_t p : {2, 3}) {
      for (std::size_t n = 0; n <= 2; ++n) {
        CAPTURE(g.name());
        const ExtendedTupleCensus x = census_extended(g, p, n);
        std::size_t total = 0;
        for (std::size_t i = 0; i < x.orbit_count(); ++i) total += g.order() / x.centralizers[i].order();
        CHECK(total == x.tuple_count);
        // Summing 1/|C| over orbits recovers the plain census.
        CHECK(x.tuple_count % g.order() == 0);
        CHECK(x.tuple_count / g.order() == census_naive(g, p, n).orbit_count());
      }
    }
  }
  CHECK(census_extended(FiniteGroup(), 2, 3).orbit_count() == 1);
}

TEST_CASE("p-groups: orbits at arity n are the tuples at arity n + 1 over |G|") {
  for (const char* spec : {"C4", "D8", "Q8", "C3xC3", "D16", "C9"}) {
    const FiniteGroup g = standard_group(spec);
    const std::uint64_t p = g.order() % 2 == 0 ? 2 : 3;
    for (std::size_t n = 0; n <= 2; ++n) {
      const std::size_t longer = census_naive(g, p, n + 1).tuple_count;
      CHECK(longer == census_extended(g, p, n).tuple_count);
      CHECK(count(census_naive(g, p, n).orbit_count()) == count(longer / g.order()));
    }
  }
}

TEST_CASE("census cap") {
  CensusOptions tight;
  tight.tuple_cap = 100;
  CHECK_THROWS_AS(census_naive(standard_group("C2xC2xC2"), 2, 3, tight), CensusTooLarge);
  CHECK_THROWS_AS(census_extended(standard_group("C2xC2xC2"), 2, 3, tight), CensusTooLarge);
  CHECK(census_recursive(standard_group("C2xC2xC2"), 2, 3, tight) == 512);
  CHECK_THROWS_AS(census_naive(standard_group("S3"), 9, 1), NotPrime);
  CHECK_THROWS_AS(census_recursive(standard_group("S3"), 9, 1), NotPrime);
}

TEST_CASE("census output is deterministic") {
  const FiniteGroup g = standard_group("S4");
  const TupleCensus a = census_naive(g, 2, 2), b = census_naive(standard_group("S4"), 2, 2);
  CHECK(a.orbit_reps == b.orbit_reps);
  CHECK(a.orbit_sizes == b.orbit_sizes);
}
