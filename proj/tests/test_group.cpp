#include <numeric>

#include "doctest.h"

#include "chromatic/error.hpp"
#include "chromatic/group.hpp"
#include "oracles/oracles.hpp"

using namespace chromatic;

namespace {

Permutation cyc(std::vector<std::vector<Point>> cycles, std::size_t degree) {
  return Permutation::from_cycles(cycles, degree);
}

std::vector<FiniteGroup> corpus() {
  std::vector<FiniteGroup> out;
  for (const auto& spec : standard_corpus()) out.push_back(standard_group(spec).with_name(spec));
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a = cyc({{0, 1, 2}}, 3);
  CHECK(a(0) == 1);
  CHECK(a(2) == 0);
  CHECK((a * a * a).is_identity());
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.to_cycle_string() == "(0 1 2)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3}), InvalidPermutation);
}

TEST_CASE("permutation products compose left to right") {
  const Permutation a = cyc({{0, 1}}, 3), b = cyc({{1, 2}}, 3);
  // (a * b)(x) = b(a(x))
  for (Point x = 0; x < 3; ++x) CHECK((a * b)(x) == b(a(x)));
  CHECK(a * b != b * a);
}

TEST_CASE("permutation associativity on S4") {
  const FiniteGroup s4 = standard_group("S4");
  const auto& e = s4.elements();
  for (std::size_t i = 0; i < e.size(); i += 5)
    for (std::size_t j = 0; j < e.size(); j += 3)
      for (std::size_t k = 0; k < e.size(); k += 7) CHECK((e[i] * e[j]) * e[k] == e[i] * (e[j] * e[k]));
}

TEST_CASE("extended and shifted permutations") {
  const Permutation a = cyc({{0, 1}}, 2);
  CHECK(a.extended(4).degree() == 4);
  CHECK(a.extended(4)(3) == 3);
  const Permutation s = a.shifted(2, 4);
  CHECK(s(2) == 3);
  CHECK(s(0) == 0);
}

TEST_CASE("closure examples") {
  CHECK(closure({cyc({{0, 1, 2}}, 3)}).order() == 3);
  const FiniteGroup d8 = closure({cyc({{0, 1, 2, 3}}, 4), cyc({{0, 2}}, 4)});
  CHECK(d8.order() == 8);
  CHECK(d8.conjugacy_classes().classes.size() == 5);
  CHECK(oracle::naive_closure({cyc({{0, 1, 2, 3}}, 4), cyc({{0, 2}}, 4)}, 4).size() == 8);
  CHECK(oracle::naive_class_count(d8) == 5);
  CHECK(closure({}, 1).order() == 1);
}

TEST_CASE("closure respects the order bound") {
  CHECK_THROWS_AS(closure({cyc({{0, 1, 2, 3, 4}}, 5), cyc({{0, 1}}, 5)}, 5, 100), ClosureExceedsBound);
  CHECK(closure({cyc({{0, 1, 2, 3, 4}}, 5), cyc({{0, 1}}, 5)}, 5, 120).order() == 120);
}

TEST_CASE("elements are sorted with the identity first") {
  for (const FiniteGroup& g : corpus()) {
    CAPTURE(g.name());
    const auto& e = g.elements();
    CHECK(e[0].is_identity());
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(std::adjacent_find(e.begin(), e.end()) == e.end());
  }
}

TEST_CASE("standard groups") {
  const FiniteGroup s3 = standard_group("S3");
  CHECK(s3.order() == 6);
  CHECK(s3.conjugacy_classes().classes.size() == 3);
  CHECK(standard_group("D12").order() == 12);
  CHECK(standard_group("D8").order() == 8);
  CHECK(standard_group("S4").order() == 24);
  CHECK(standard_group("A4").order() == 12);
  CHECK(standard_group("Q8").order() == 8);
  CHECK(standard_group("C1").order() == 1);
  CHECK(standard_group("D2").order() == 2);
  const FiniteGroup v4 = standard_group("C2xC2");
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(standard_group("C2xC3xC2").order() == 12);
  CHECK(standard_group("perm:(0 1 2),(0 1)").order() == 6);
  CHECK(is_isomorphic(standard_group("perm:(0 1 2),(0 1)"), s3));
}

TEST_CASE("unknown specs are rejected") {
  for (const char* bad : {"", "X5", "D7", "D0", "C0", "s3", "S3x", "xC2", "perm:(0 1", "perm:(0 0)", "Q7"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(standard_group(bad), UnknownSpec);
  }
  // Whitespace around the product sign is tolerated.
  CHECK(standard_group("C2 x C2").order() == 4);
}

TEST_CASE("conjugacy classes") {
  CHECK(standard_group("D8").conjugacy_classes().classes.size() == 5);
  CHECK(standard_group("C4").conjugacy_classes().classes.size() == 4);
  CHECK(standard_group("C1").conjugacy_classes().classes.size() == 1);
  CHECK(standard_group("S4").conjugacy_classes().classes.size() == 5);
  CHECK(standard_group("Q8").conjugacy_classes().classes.size() == 5);
}

TEST_CASE("class partition, representatives and class equation on the corpus") {
  for (const FiniteGroup& g : corpus()) {
    CAPTURE(g.name());
    const auto& cc = g.conjugacy_classes();
    CHECK(cc.classes.size() == oracle::naive_class_count(g));
    std::vector<int> seen(g.order(), 0);
    std::size_t total = 0, equation = 0;
    for (std::size_t i = 0; i < cc.classes.size(); ++i) {
      for (ElementId x : cc.classes[i]) {
        ++seen[x];
        CHECK(g.class_index(x) == i);
      }
      CHECK(cc.representatives[i] == *std::min_element(cc.classes[i].begin(), cc.classes[i].end()));
      CHECK(cc.class_sizes[i] == cc.classes[i].size());
      total += cc.class_sizes[i];
      equation += g.order() / g.centralizer_order(cc.representatives[i]);
    }
    CHECK(total == g.order());
    CHECK(equation == g.order());
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("Lagrange: element orders divide the group order") {
  for (const FiniteGroup& g : corpus())
    for (ElementId x = 0; x < g.order(); ++x) CHECK(g.order() % g.element_order(x) == 0);
}

TEST_CASE("multiplication table agrees with permutation products") {
  for (const char* spec : {"S4", "Q8", "D12xC2"}) {
    const FiniteGroup g = standard_group(spec);
    for (ElementId a = 0; a < g.order(); ++a) {
      CHECK(g.element(g.inverse(a)) == g.element(a).inverse());
      for (ElementId b = 0; b < g.order(); b += 3) CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
    }
  }
}

TEST_CASE("centralizers") {
  const FiniteGroup s3 = standard_group("S3");
  const ElementId e[] = {FiniteGroup::identity()};
  CHECK(centralizer(s3, std::span<const ElementId>(e)).order() == 6);
  const Permutation three = cyc({{0, 1, 2}}, 3);
  const Permutation s[] = {three};
  CHECK(centralizer(s3, std::span<const Permutation>(s)).order() == 3);

  const FiniteGroup d8 = standard_group("D8");
  for (ElementId z : center_ids(d8)) {
    const ElementId one[] = {z};
    CHECK(centralizer(d8, std::span<const ElementId>(one)).order() == 8);
  }
  CHECK(center_ids(d8).size() == 2);

  const Permutation outside[] = {cyc({{0, 3}}, 4)};
  CHECK_THROWS_AS(centralizer(s3, std::span<const Permutation>(outside)), ElementNotInGroup);
}

TEST_CASE("centralizer contains the center and the generated subgroup of commuting sets") {
  for (const FiniteGroup& g : corpus()) {
    CAPTURE(g.name());
    const auto z = center_ids(g);
    CHECK(z.size() == oracle::center_order(g));
    for (ElementId x = 0; x < g.order(); x += 5) {
      const ElementId s[] = {x};
      const auto c = centralizer_ids(g, std::span<const ElementId>(s));
      for (ElementId zz : z) CHECK(std::binary_search(c.begin(), c.end(), zz));
      for (ElementId y : closure_ids(g, std::span<const ElementId>(s))) CHECK(std::binary_search(c.begin(), c.end(), y));
      CHECK(c.size() == g.centralizer_order(x));
    }
  }
}

TEST_CASE("subgroup generation") {
  const FiniteGroup d8 = standard_group("D8");
  CHECK(subgroup_generated(d8, std::span<const ElementId>()).order() == 1);
  for (ElementId x = 0; x < d8.order(); ++x)
    if (d8.element_order(x) == 4) {
      const ElementId r[] = {x};
      const FiniteGroup c = subgroup_generated(d8, std::span<const ElementId>(r));
      CHECK(c.order() == 4);
      CHECK(is_isomorphic(c, standard_group("C4")));
    }
  const FiniteGroup s4 = standard_group("S4");
  const Permutation gens[] = {cyc({{0, 1}}, 4), cyc({{2, 3}}, 4)};
  CHECK(subgroup_generated(s4, std::span<const Permutation>(gens)).order() == 4);
  const Permutation bad[] = {cyc({{0, 4}}, 5)};
  CHECK_THROWS_AS(subgroup_generated(s4, std::span<const Permutation>(bad)), ElementNotInGroup);
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup_ids(standard_group("S4")).size() == 12);
  CHECK(derived_subgroup_ids(standard_group("A4")).size() == 4);
  CHECK(derived_subgroup_ids(standard_group("C6")).size() == 1);
  CHECK(derived_subgroup_ids(standard_group("Q8")).size() == 2);
}

TEST_CASE("minimal generating sequence generates") {
  for (const FiniteGroup& g : corpus()) {
    const auto gens = minimal_generating_sequence(g);
    CHECK(closure_ids(g, std::span<const ElementId>(gens)).size() == g.order());
  }
  CHECK(minimal_generating_sequence(standard_group("C1")).empty());
  CHECK(minimal_generating_sequence(standard_group("C2xC2xC2")).size() == 3);
}

TEST_CASE("direct products") {
  CHECK(direct_product(standard_group("C2"), standard_group("C2")).order() == 4);
  const FiniteGroup s3c2 = direct_product(standard_group("S3"), standard_group("C2"));
  CHECK(s3c2.order() == 12);
  CHECK(is_isomorphic(s3c2, standard_group("D12")));
  for (const FiniteGroup& g : corpus()) CHECK(is_isomorphic(direct_product(g, FiniteGroup()), g));
  set_max_order(100);
  CHECK_THROWS_AS(direct_product(standard_group("S4"), standard_group("S3")), ClosureExceedsBound);
  set_max_order(kDefaultMaxOrder);
}

TEST_CASE("monomorphism classes") {
  const FiniteGroup s3 = standard_group("S3");
  CHECK(monomorphism_classes(standard_group("C3"), s3) == 1);
  CHECK(monomorphism_classes(standard_group("C4"), s3) == 0);
  CHECK(monomorphism_classes(s3, s3) == 1);
  CHECK(monomorphism_classes(standard_group("C2"), standard_group("D8")) == 3);
  CHECK(monomorphism_classes(standard_group("C2xC2"), standard_group("C4")) == 0);
  for (const FiniteGroup& g : corpus()) CHECK(monomorphism_classes(FiniteGroup(), g) == 1);
}

TEST_CASE("diagonal monomorphism count is |Out| by brute force") {
  for (const char* spec : {"C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "D8", "Q8", "A4", "C3xC3", "D10"}) {
    CAPTURE(spec);
    const FiniteGroup g = standard_group(spec);
    CHECK(monomorphism_classes(g, g) == oracle::outer_automorphism_count(g));
  }
  CHECK(oracle::automorphism_count(standard_group("C2xC2")) == 6);
  CHECK(oracle::automorphism_count(standard_group("Q8")) == 24);
  CHECK(oracle::outer_automorphism_count(standard_group("Q8")) == 6);
}

TEST_CASE("homomorphism extension") {
  const FiniteGroup c4 = standard_group("C4");
  const auto gens = minimal_generating_sequence(c4);
  REQUIRE(gens.size() == 1);
  const FiniteGroup c2 = standard_group("C2");
  const ElementId to_c2[] = {1};
  const auto map = extend_homomorphism(c4, gens, c2, to_c2);
  REQUIRE(map);
  CHECK((*map)[0] == 0);
  // A generator of C3 cannot map to an element of order 2.
  const FiniteGroup c3 = standard_group("C3");
  CHECK_FALSE(extend_homomorphism(c3, minimal_generating_sequence(c3), c2, to_c2));
  CHECK(find_monomorphism(standard_group("C4"), standard_group("D8")));
  CHECK_FALSE(find_monomorphism(standard_group("C4"), standard_group("C2xC2xC2")));
}

TEST_CASE("isomorphism tests") {
  CHECK_FALSE(is_isomorphic(standard_group("D8"), standard_group("C4xC2")));
  CHECK_FALSE(is_isomorphic(standard_group("D8"), standard_group("Q8")));
  CHECK(is_isomorphic(direct_product(standard_group("S3"), standard_group("C2")), standard_group("D12")));
  CHECK(is_isomorphic(standard_group("C6"), standard_group("C3xC2")));
  CHECK_FALSE(is_isomorphic(standard_group("C4xC4"), standard_group("C2xC8")));
}

TEST_CASE("isomorphism is reflexive and symmetric, and refutes on fingerprint mismatch") {
  const auto c = corpus();
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(is_isomorphic(c[i], c[i]));
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const bool a = is_isomorphic(c[i], c[j]);
      CHECK(a == is_isomorphic(c[j], c[i]));
      // The corpus lists pairwise non-isomorphic groups.
      CHECK_FALSE(a);
      if (fingerprint(c[i]) != fingerprint(c[j])) CHECK_FALSE(a);
    }
  }
}

TEST_CASE("relabelled copies are isomorphic") {
  // Conjugating every generator by a fixed permutation gives an isomorphic group.
  const FiniteGroup s4 = standard_group("S4");
  const Permutation t = cyc({{0, 3, 1}}, 4);
  std::vector<Permutation> gens;
  for (const auto& g : s4.generators()) gens.push_back(t.inverse() * g * t);
  CHECK(is_isomorphic(closure(gens), s4));
  CHECK(fingerprint(closure(gens)) == fingerprint(s4));
}

TEST_CASE("identify and group_spec") {
  CHECK(identify(standard_group("C2xC4")) == "C4xC2");
  CHECK(identify(standard_group("C6")) == "C6");
  CHECK(identify(standard_group("C3xC2")) == "C6");
  CHECK(identify(direct_product(standard_group("S3"), standard_group("C2"))) == "D12");
  for (const FiniteGroup& g : corpus()) {
    CAPTURE(g.name());
    CHECK(is_isomorphic(standard_group(group_spec(g)), g));
  }
}

TEST_CASE("standard corpus is ordered by order") {
  const auto c = corpus();
  CHECK(c.size() >= 30);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].order() <= c[i].order());
  CHECK(c.back().order() <= 48);
}
