#include <functional>

#include "doctest.h"

#include "chromatic/closed_forms.hpp"
#include "chromatic/error.hpp"
#include "chromatic/report.hpp"

using namespace chromatic;

namespace {

Integer pw(unsigned long b, std::size_t n) { return ipow(Integer(b), n); }

Rational eval(const char* name, long n) { return evaluate_closed_form(closed_form_target(name), n); }

Rational summand_total(const CharacterReport& r) {
  Rational total = 0;
  for (const auto& s : r.summands) total += Rational(s.count) * s.euler;
  return total;
}

}  // namespace

TEST_CASE("bundled targets") {
  const auto names = closed_form_names();
  CHECK(names.size() == 19);
  for (const auto& name : names) {
    const ClosedFormTarget t = closed_form_target(name);
    CHECK(t.name == name);
    CHECK(is_prime(t.prime));
    CHECK_FALSE(t.description.empty());
    CHECK(closed_form_chi_q(t) == evaluate_closed_form(t, 0));
  }
  CHECK_THROWS_AS(closed_form_target("sl7"), UnknownSpec);
  CHECK_FALSE(closed_form_target("sp18").cohomology_known);
  CHECK(closed_form_target("sp4").cohomology_known);
}

TEST_CASE("closed-form values") {
  using F = std::function<Rational(std::size_t)>;
  const std::vector<std::pair<const char*, F>> cases = {
      {"sl2z_p2", [](std::size_t n) -> Rational { return Rational(pw(4, n)); }},
      {"sl2z_p3", [](std::size_t n) -> Rational { return Rational(pw(3, n)); }},
      {"sl2_sqrt5_p3", [](std::size_t n) -> Rational { return Rational(2 * pw(3, n) + 2); }},
      {"sl2_sqrt5_p5", [](std::size_t n) -> Rational { return Rational(2 * pw(5, n) + 2); }},
      {"infinite_dihedral", [](std::size_t n) -> Rational { return Rational(2 * pw(2, n) - 1); }},
      {"z2_rtimes_c3", [](std::size_t n) -> Rational { return Rational(3 * pw(3, n) - 1); }},
      {"z_x_c2", [](std::size_t) -> Rational { return Rational(0); }},
      {"gl4", [](std::size_t) -> Rational { return Rational(1); }},
      {"sl4", [](std::size_t) -> Rational { return Rational(0); }},
      {"sp4", [](std::size_t n) -> Rational { return Rational(pw(5, n) + 1); }},
      {"sp6", [](std::size_t n) -> Rational { return 5 + ratio(8 * (pw(7, n) - 1), 6); }},
      {"sp18", [](std::size_t n) -> Rational { return ratio(256 * pw(19, n) + 4496, 9); }},
      {"gamma2", [](std::size_t n) -> Rational { return Rational(pw(5, n)); }},
      {"gamma3", [](std::size_t n) -> Rational { return 1 + ratio(8 * (pw(7, n) - 1), 6); }},
      {"gamma15", [](std::size_t n) -> Rational { return ratio(16 * pw(31, n) + 2153282, 3); }},
      {"gl2z_p3", [](std::size_t n) -> Rational { return ratio(pw(3, n) + 1, 2); }},
  };
  for (const auto& [name, f] : cases)
    for (std::size_t n = 0; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(eval(name, static_cast<long>(n)) == f(n));
    }
  CHECK(eval("sp18", 0) == 528);
  CHECK(eval("gamma15", 0) == 717766);
  CHECK(eval("gamma15", 1) == 717766 + 16 * 30 / 3);
}

TEST_CASE("orbifold row") {
  CHECK(eval("infinite_dihedral", -1) == 0);
  CHECK(eval("z2_rtimes_c3", -1) == 0);
  CHECK(eval("z_x_c2", -1) == 0);
  for (const char* name : {"sp18", "gl4", "gamma2", "sl2z_p3", "gl2z_p3"}) {
    CHECK_FALSE(closed_form_has_orbifold_row(closed_form_target(name)));
    CHECK_THROWS_AS(eval(name, -1), HeightUndefined);
  }
  CHECK_THROWS_AS(eval("z_x_c2", -2), InvalidArgument);
}

TEST_CASE("crystallographic formula") {
  for (unsigned long p : {2, 3, 5, 7, 11})
    for (long r : {1, 3, 8})
      for (long n = -1; n <= 4; ++n) {
        const Rational got = chi_crystallographic(p, n, Integer(r), true, false);
        CHECK(got == Rational(Integer(r)) * rpow(Rational(Integer(p)), n) - ratio(Integer(r), Integer(p)));
        CHECK(chi_crystallographic(p, n, Integer(r), false, true) == 0);
        if (n >= 0) CHECK(got * Integer(p) == Integer(r) * (pw(p, static_cast<std::size_t>(n) + 1) - 1));
      }
  CHECK(chi_crystallographic(3, 2, Integer(0), false, false) == 0);
  CHECK_THROWS_AS(chi_crystallographic(3, 1, Integer(1), true, true), InvalidArgument);
  CHECK_THROWS_AS(chi_crystallographic(3, 1, Integer(1), false, false), InvalidArgument);
  CHECK_THROWS_AS(chi_crystallographic(3, 1, Integer(-1), true, false), InvalidArgument);
  CHECK_THROWS_AS(chi_crystallographic(3, -2, Integer(1), true, false), InvalidArgument);
  CHECK_THROWS_AS(chi_crystallographic(9, 1, Integer(1), true, false), NotPrime);
}

TEST_CASE("SL2 formulas") {
  const std::vector<MaximalSubgroupDatum> sl2z = {cyclic_datum(4, 1, 3), cyclic_datum(6, 1, 3)};
  CHECK(sl2z[1].p_part_order == 3);
  CHECK(chi_sl2_ok(3, 2, Rational(-1, 12), sl2z) == 9);
  CHECK_THROWS_AS(chi_sl2_ok(2, 1, Rational(-1, 12), sl2z), EvenPrime);
  CHECK_THROWS_AS(chi_sl2_ok(4, 1, Rational(-1, 12), sl2z), NotPrime);
  CHECK_THROWS_AS(chi_sl2_ok(3, 1, Rational(-1, 12), {{6, 2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(chi_sl2_ok(3, 1, Rational(-1, 12), {{0, 1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(cyclic_datum(0, 1, 3), InvalidArgument);
  const std::vector<MaximalSubgroupDatum> at2 = {cyclic_datum(4, 1, 2), cyclic_datum(6, 1, 2)};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(chi_sl2_ok_p2(n, Rational(-1, 12), at2) == Rational(pw(4, n)));
  // Without p-torsion the character is constant in n.
  CHECK(chi_sl2_ok(5, 3, Rational(-1, 12), {cyclic_datum(4, 1, 5), cyclic_datum(6, 1, 5)}) ==
        chi_sl2_ok(5, 0, Rational(-1, 12), {cyclic_datum(4, 1, 5), cyclic_datum(6, 1, 5)}));
}

TEST_CASE("torus and symplectic formulas") {
  const TorusSplitting gl = chi_gl_pminus1(7, 2, Rational(1), Integer(1));
  CHECK(gl.chi_kn == 1);
  CHECK(gl.summands == 8);
  CHECK(gl.torus_dim == 2);
  CHECK(chi_sl_pminus1(7, 2, Rational(0), Integer(1)).summands == 16);
  CHECK(chi_gl_pminus1(5, 0, Rational(1), Integer(3)).summands == 0);
  CHECK_THROWS_AS(chi_gl_pminus1(3, 1, Rational(1), Integer(1)), InvalidArgument);
  CHECK_THROWS_AS(chi_gl_pminus1(2, 1, Rational(1), Integer(1)), InvalidArgument);
  CHECK_THROWS_AS(chi_gl_pminus1(5, 1, Rational(1), Integer(0)), InvalidArgument);
  CHECK(sp_pminus1_summands(5, 1, Integer(1)) == 4);
  CHECK(chi_sp_pminus1(3, 2, Rational(1), Integer(1)) == 1 + 2 * 4);
  CHECK_THROWS_AS(chi_sp_pminus1(2, 1, Rational(1), Integer(1)), EvenPrime);
  CHECK_THROWS_AS(chi_sp_pminus1(5, 1, Rational(1), Integer(0)), InvalidArgument);
  CHECK(chi_mapping_class(11, 1, Rational(1)) == 1 + 10 * 12 / 6);
  CHECK_THROWS_AS(chi_mapping_class(3, 1, Rational(1)), InvalidArgument);
  CHECK(exponential_sum({{Rational(1, 2), Integer(3)}, {Rational(1, 2), Integer(1)}}, 3) == 14);
  CHECK(exponential_sum({}, 3) == 0);
}

TEST_CASE("malformed entries") {
  CHECK_THROWS_AS(closed_form_from_json("x", nlohmann::json::parse(R"({"prime": 3})")), ParseError);
  const ClosedFormTarget t = closed_form_from_json("x", nlohmann::json::parse(R"({"kind": "sp", "prime": 5})"));
  CHECK_THROWS_AS(evaluate_closed_form(t, 1), ParseError);
  const ClosedFormTarget u = closed_form_from_json("y", nlohmann::json::parse(R"({"kind": "mystery", "prime": 5})"));
  CHECK_THROWS_AS(evaluate_closed_form(u, 1), UnknownSpec);
}

TEST_CASE("closed-form reports recombine") {
  for (const auto& name : closed_form_names()) {
    const ClosedFormTarget t = closed_form_target(name);
    for (std::size_t n = 0; n <= 3; ++n) {
      CAPTURE(name);
      const CharacterReport r = character_report(t, n);
      CHECK(r.chi_kn == evaluate_closed_form(t, static_cast<long>(n)));
      CHECK(summand_total(r) == r.chi_kn);
      for (const auto& s : r.summands)
        if (s.even_rank && s.odd_rank) CHECK(s.euler == Rational(*s.even_rank - *s.odd_rank));
    }
  }
  const CharacterReport gl6 = character_report(closed_form_target("gl6"), 1);
  REQUIRE(gl6.summands.size() == 2);
  CHECK(*gl6.summands[1].even_rank == 2);
  CHECK(*gl6.summands[1].odd_rank == 2);
  CHECK(gl6.summands[1].euler == 0);
  CHECK_FALSE(character_report(closed_form_target("gl10"), 1).notes.empty());
}

TEST_CASE("finite group and Coxeter reports") {
  for (const char* spec : {"S3", "D8", "A4", "S4", "Q8xC2"})
    for (std::uint64_t p : {2, 3})
      for (std::size_t n = 0; n <= 2; ++n) {
        const FiniteGroup g = standard_group(spec);
        const CharacterReport r = character_report(g, p, n);
        CHECK(r.chi_kn == Rational(chi_kn_finite(g, p, n)));
        CHECK(summand_total(r) == r.chi_kn);
        CHECK(r.summand_count == chi_kn_finite(g, p, n));
      }
  for (std::size_t n = 0; n <= 3; ++n) {
    const CharacterReport r = character_report(Graph::cycle(5), n, "pentagon");
    CHECK(r.chi_kn == Rational(chi_kn_coxeter(Graph::cycle(5), n)));
    CHECK(summand_total(r) == r.chi_kn);
  }
  const auto j = to_json(character_report(standard_group("S3"), 3, 1));
  CHECK(j["chi_kn"] == "2");
  CHECK(j["summands"].size() == 2);
  CHECK(j["target"].is_string());
}
