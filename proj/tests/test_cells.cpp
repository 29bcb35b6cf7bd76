#include <algorithm>
#include <fstream>
#include <random>

#include "doctest.h"

#include "chromatic/cells.hpp"
#include "chromatic/error.hpp"

using namespace chromatic;

namespace {

FiniteGroup grp(const char* spec) { return standard_group(spec); }

Integer soule_p2(std::size_t n) { return 2 * ipow(Integer(4), n) - 2 * ipow(Integer(2), n) + 1; }

}  // namespace

TEST_CASE("Burnside class of a cell structure") {
  const ProperCellStructure point{"point", {{0, grp("S3"), 1}}};
  CHECK(to_burnside_class(point) == class_of(grp("S3")));
  CHECK(to_burnside_class(dihedral_amalgam()) == class_of(grp("D8")) * Integer(2) - class_of(grp("C4")));
  CHECK(chi_orb_cells(sl2z_tree()) == Rational(-1, 12));
  CHECK(chi_q_cells(sl2z_tree()) == 1);
}

TEST_CASE("amalgam trees") {
  const ProperCellStructure t = amalgam(grp("C6"), grp("C4"), grp("C2"));
  CHECK(t.orbit_cell_count() == 3);
  CHECK(t.dimension() == 1);
  CHECK(chi_kn_cells(dihedral_amalgam(), 2, 1) == 6);
  CHECK(chi_q(to_burnside_class(dihedral_amalgam())) == 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(chi_kn_cells(sl2z_tree(), 2, n) == ipow(Integer(4), n));
    CHECK(chi_kn_cells(sl2z_tree(), 3, n) == ipow(Integer(3), n));
    CHECK(2 * chi_kn_cells(gl2z_tree(), 3, n) == ipow(Integer(3), n) + 1);
  }
}

TEST_CASE("amalgam chi_orb is 1/|H| + 1/|L| - 1/|K|") {
  const std::vector<std::tuple<const char*, const char*, const char*>> cases = {
      {"C6", "C4", "C2"}, {"D8", "D8", "C4"}, {"D8", "D12", "C2xC2"}, {"S4", "S4", "D8"}, {"S3", "C6", "C3"}, {"A4", "S3", "C1"}};
  for (const auto& [h, l, k] : cases) {
    const FiniteGroup H = grp(h), L = grp(l), K = grp(k);
    const ProperCellStructure t = amalgam(H, L, K);
    const Rational want = Rational(1) / H.order() + Rational(1) / L.order() - Rational(1) / K.order();
    CHECK(chi_orb(to_burnside_class(t)) == want);
    CHECK(chi_orb_cells(t) == want);
  }
}

TEST_CASE("amalgam embeddings are validated") {
  CHECK_THROWS_AS(amalgam(grp("C6"), grp("C4"), grp("C3")), InvalidEmbedding);
  CHECK_THROWS_AS(amalgam(grp("C2xC2"), grp("C4"), grp("C2xC2")), InvalidEmbedding);
  const FiniteGroup c4 = grp("C4"), c2 = grp("C2"), c6 = grp("C6");
  // C2 -> C4 must hit the unique involution.
  ElementId involution = 0;
  for (ElementId x = 0; x < c4.order(); ++x)
    if (c4.element_order(x) == 2) involution = x;
  ElementId in_c6 = 0;
  for (ElementId x = 0; x < c6.order(); ++x)
    if (c6.element_order(x) == 2) in_c6 = x;
  CHECK_NOTHROW(amalgam(c4, c6, c2, {involution}, {in_c6}));
  CHECK_THROWS_AS(amalgam(c4, c6, c2, {0}, {in_c6}), InvalidEmbedding);
  ElementId generator = 0;
  for (ElementId x = 0; x < c4.order(); ++x)
    if (c4.element_order(x) == 4) generator = x;
  CHECK_THROWS_AS(amalgam(c4, c6, c2, {generator}, {in_c6}), InvalidEmbedding);
  CHECK_THROWS_AS(amalgam(c4, c6, c2, {}, {in_c6}), InvalidEmbedding);
  CHECK_THROWS_AS(amalgam(c4, c6, c2, {99}, {in_c6}), InvalidEmbedding);
}

TEST_CASE("Soule complex") {
  const ProperCellStructure s = soule_sl3();
  CHECK(s.orbit_cell_count() == 19);
  CHECK(s.dimension() == 3);
  CHECK(chi_q(to_burnside_class(s)) == 1);
  CHECK(chi_orb_cells(s) == 0);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(chi_kn_cells(s, 3, n) == ipow(Integer(3), n));
    CHECK(chi_kn_cells(s, 2, n) == soule_p2(n));
    CHECK(chi_kn_cells(s, 5, n) == 1);
  }
  CHECK(chi_kn_cells(s, 2, 1) == 5);
  // Cells per dimension: 5, 8, 5, 1 (alternating sum 1).
  std::vector<std::size_t> per_dim(4, 0);
  for (const Cell& c : s.cells) per_dim[c.dim] += c.multiplicity;
  CHECK(per_dim == std::vector<std::size_t>{5, 8, 5, 1});
  // Without 3-torsion: one 0-cell, six 1-cells, five 2-cells, one 3-cell.
  std::vector<std::size_t> coprime(4, 0);
  for (const Cell& c : s.cells)
    if (c.stabilizer.order() % 3 != 0) coprime[c.dim] += c.multiplicity;
  CHECK(coprime == std::vector<std::size_t>{1, 6, 5, 1});
}

TEST_CASE("cells route equals the Burnside route") {
  for (const auto& name : builtin_cell_structures()) {
    const ProperCellStructure c = builtin_cell_structure(name);
    for (std::uint64_t p : {2, 3, 5})
      for (std::size_t n = 0; n <= 3; ++n) CHECK(chi_kn_cells(c, p, n) == chi_kn(to_burnside_class(c), p, n));
  }
  std::mt19937 rng(23);
  std::vector<FiniteGroup> pool;
  for (const auto& spec : standard_corpus()) pool.push_back(standard_group(spec));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), dim(0, 3), mult(1, 3), len(1, 6);
  for (int i = 0; i < 20; ++i) {
    ProperCellStructure c{"random", {}};
    for (std::size_t k = len(rng); k > 0; --k) c.cells.push_back({dim(rng), pool[pick(rng)], mult(rng)});
    for (std::uint64_t p : {2, 3})
      for (std::size_t n = 0; n <= 2; ++n) CHECK(chi_kn_cells(c, p, n) == chi_kn(to_burnside_class(c), p, n));
    CHECK(chi_orb_cells(c) == chi_orb(to_burnside_class(c)));
    CHECK(chi_q_cells(c) == chi_q(to_burnside_class(c)));
  }
}

TEST_CASE("cell order does not matter") {
  std::mt19937 rng(29);
  ProperCellStructure s = soule_sl3();
  const BurnsideClass x = to_burnside_class(s);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(s.cells.begin(), s.cells.end(), rng);
    CHECK(to_burnside_class(s) == x);
    CHECK(chi_kn_cells(s, 2, 2) == soule_p2(2));
    CHECK(chi_orb_cells(s) == 0);
  }
}

TEST_CASE("built-in lookup") {
  CHECK(builtin_cell_structures().size() == 4);
  CHECK(builtin_cell_structure("sl2z").label == "sl2z");
  CHECK_THROWS_AS(builtin_cell_structure("nope"), UnknownSpec);
}

TEST_CASE("cell structure JSON") {
  for (const auto& name : builtin_cell_structures()) {
    const ProperCellStructure c = builtin_cell_structure(name);
    const ProperCellStructure back = cell_structure_from_json(to_json(c));
    CHECK(back.label == c.label);
    CHECK(to_burnside_class(back) == to_burnside_class(c));
    CHECK(to_json(back) == to_json(c));
  }
  CHECK_THROWS_AS(cell_structure_from_json(nlohmann::json::parse(R"({"cells": 3})")), ParseError);
  CHECK_THROWS_AS(cell_structure_from_json(nlohmann::json::parse(R"({"cells": [{"dim": 0}]})")), ParseError);
  CHECK_THROWS_AS(cell_structure_from_json(nlohmann::json::parse(R"({"cells": [{"dim": 0, "stabilizer": "C2", "multiplicity": 0}]})")),
                  ParseError);
  CHECK_THROWS_AS(cell_structure_from_json(nlohmann::json::parse(R"({"cells": [{"dim": -1, "stabilizer": "C2"}]})")),
                  ParseError);
  CHECK_THROWS_AS(cell_structure_from_json(nlohmann::json::parse(R"({"cells": [{"dim": 0, "stabilizer": "X"}]})")),
                  UnknownSpec);
}

TEST_CASE("bundled cell files match the built-ins") {
  for (const auto& name : builtin_cell_structures()) {
    CAPTURE(name);
    const ProperCellStructure file = load_cell_structure(std::string(CHROMATIC_DATA_DIR) + "/cells/" + name + ".json");
    CHECK(to_json(file) == to_json(builtin_cell_structure(name)));
  }
  CHECK(load_cell_structure("soule_sl3").orbit_cell_count() == 19);
  CHECK_THROWS(load_cell_structure("/nonexistent/cells.json"));
}
