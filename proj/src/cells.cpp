#include "chromatic/cells.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "chromatic/error.hpp"

namespace chromatic {

std::size_t ProperCellStructure::orbit_cell_count() const {
  std::size_t total = 0;
  for (const Cell& cell : cells) total += cell.multiplicity;
  return total;
}

std::size_t ProperCellStructure::dimension() const {
  std::size_t d = 0;
  for (const Cell& cell : cells) d = std::max(d, cell.dim);
  return d;
}

namespace {

Integer signed_multiplicity(const Cell& cell) {
  Integer m(static_cast<unsigned long>(cell.multiplicity));
  return cell.dim % 2 == 0 ? m : Integer(-m);
}

void check_embedding(const FiniteGroup& k, const FiniteGroup& target, const std::vector<ElementId>& images,
                     const char* side) {
  const auto gens = minimal_generating_sequence(k);
  if (images.size() != gens.size())
    throw InvalidEmbedding(std::string("embedding into ") + side + " needs " + std::to_string(gens.size()) +
                           " generator images, got " + std::to_string(images.size()));
  for (ElementId x : images)
    if (x >= target.order())
      throw InvalidEmbedding(std::string("image id ") + std::to_string(x) + " outside " + side);
  auto map = extend_homomorphism(k, gens, target, images);
  if (!map) throw InvalidEmbedding(std::string("generator images into ") + side + " are not a homomorphism");
  std::set<ElementId> seen(map->begin(), map->end());
  if (seen.size() != k.order()) throw InvalidEmbedding(std::string("homomorphism into ") + side + " is not injective");
}

}  // namespace

BurnsideClass to_burnside_class(const ProperCellStructure& c) {
  BurnsideClass out;
  for (const Cell& cell : c.cells) out += BurnsideClass::of(cell.stabilizer, signed_multiplicity(cell));
  return out;
}

Integer chi_kn_cells(const ProperCellStructure& c, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  require_prime(p);
  Integer sum = 0;
  for (const Cell& cell : c.cells) sum += signed_multiplicity(cell) * census_recursive(cell.stabilizer, p, n, options);
  return sum;
}

Rational chi_orb_cells(const ProperCellStructure& c) {
  Rational sum = 0;
  for (const Cell& cell : c.cells)
    sum += ratio(signed_multiplicity(cell), Integer(static_cast<unsigned long>(cell.stabilizer.order())));
  return sum;
}

Integer chi_q_cells(const ProperCellStructure& c) {
  Integer sum = 0;
  for (const Cell& cell : c.cells) sum += signed_multiplicity(cell);
  return sum;
}

ProperCellStructure amalgam(const FiniteGroup& h, const FiniteGroup& l, const FiniteGroup& k,
                            const std::vector<ElementId>& into_h, const std::vector<ElementId>& into_l,
                            std::string label) {
  check_embedding(k, h, into_h, "H");
  check_embedding(k, l, into_l, "L");
  if (label.empty()) label = group_spec(h) + " *_" + group_spec(k) + " " + group_spec(l);
  return {label, {{0, h, 1}, {0, l, 1}, {1, k, 1}}};
}

ProperCellStructure amalgam(const FiniteGroup& h, const FiniteGroup& l, const FiniteGroup& k, std::string label) {
  auto into_h = find_monomorphism(k, h);
  if (!into_h) throw InvalidEmbedding(group_spec(k) + " does not embed in " + group_spec(h));
  auto into_l = find_monomorphism(k, l);
  if (!into_l) throw InvalidEmbedding(group_spec(k) + " does not embed in " + group_spec(l));
  return amalgam(h, l, k, *into_h, *into_l, std::move(label));
}

ProperCellStructure soule_sl3() {
  const FiniteGroup s4 = standard_group("S4"), d8 = standard_group("D8"), d12 = standard_group("D12");
  const FiniteGroup c2 = standard_group("C2"), s3 = standard_group("S3"), v4 = standard_group("C2xC2");
  const FiniteGroup trivial = standard_group("C1");
  return {"soule_sl3",
          {{0, s4, 3},
           {0, d8, 1},
           {0, d12, 1},
           {1, c2, 2},
           {1, d8, 2},
           {1, s3, 2},
           {1, v4, 2},
           {2, c2, 3},
           {2, v4, 1},
           {2, trivial, 1},
           {3, trivial, 1}}};
}

ProperCellStructure sl2z_tree() {
  return amalgam(standard_group("C6"), standard_group("C4"), standard_group("C2"), "sl2z");
}

ProperCellStructure dihedral_amalgam() {
  return amalgam(standard_group("D8"), standard_group("D8"), standard_group("C4"), "d8_amalgam");
}

ProperCellStructure gl2z_tree() {
  return amalgam(standard_group("D8"), standard_group("D12"), standard_group("C2xC2"), "gl2z");
}

std::vector<std::string> builtin_cell_structures() { return {"soule_sl3", "sl2z", "d8_amalgam", "gl2z"}; }

ProperCellStructure builtin_cell_structure(const std::string& name) {
  if (name == "soule_sl3") return soule_sl3();
  if (name == "sl2z") return sl2z_tree();
  if (name == "d8_amalgam") return dihedral_amalgam();
  if (name == "gl2z") return gl2z_tree();
  throw UnknownSpec("unknown cell structure '" + name + "'");
}

nlohmann::json to_json(const ProperCellStructure& c) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& cell : c.cells)
    cells.push_back({{"dim", cell.dim}, {"stabilizer", group_spec(cell.stabilizer)}, {"multiplicity", cell.multiplicity}});
  return {{"label", c.label}, {"cells", cells}};
}

ProperCellStructure cell_structure_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array())
    throw ParseError("cell structure JSON needs a 'cells' array");
  ProperCellStructure out;
  if (j.contains("label")) out.label = j.at("label").get<std::string>();
  for (const auto& cell : j.at("cells")) {
    if (!cell.is_object() || !cell.contains("dim") || !cell.contains("stabilizer"))
      throw ParseError("each cell needs 'dim' and 'stabilizer'");
    const auto& dim = cell.at("dim");
    if (!dim.is_number_unsigned()) throw ParseError("cell 'dim' must be a non-negative integer");
    std::size_t multiplicity = 1;
    if (cell.contains("multiplicity")) {
      const auto& m = cell.at("multiplicity");
      if (!m.is_number_unsigned() || m.get<std::size_t>() == 0)
        throw ParseError("cell 'multiplicity' must be a positive integer");
      multiplicity = m.get<std::size_t>();
    }
    out.cells.push_back({dim.get<std::size_t>(), standard_group(cell.at("stabilizer").get<std::string>()), multiplicity});
  }
  return out;
}

ProperCellStructure load_cell_structure(const std::string& name_or_path) {
  const auto names = builtin_cell_structures();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_cell_structure(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw UnknownSpec("no built-in cell structure or readable file named '" + name_or_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse " + name_or_path + ": " + e.what());
  }
  try {
    return cell_structure_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed cell structure in " + name_or_path + ": " + e.what());
  }
}

}  // namespace chromatic
