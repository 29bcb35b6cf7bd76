#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromatic/burnside.hpp"
#include "chromatic/census.hpp"
#include "chromatic/group.hpp"
#include "chromatic/numeric.hpp"

namespace chromatic {

/// `multiplicity` equivariant cells of dimension `dim` with this stabilizer.
/// Free cells carry the trivial group.
struct Cell {
  std::size_t dim = 0;
  FiniteGroup stabilizer;
  std::size_t multiplicity = 1;
};

/// Equivariant cell data of a finite proper G-CW complex.
struct ProperCellStructure {
  std::string label;
  std::vector<Cell> cells;

  std::size_t orbit_cell_count() const;
  std::size_t dimension() const;
};

/// sum (-1)^dim * multiplicity * [stabilizer]
BurnsideClass to_burnside_class(const ProperCellStructure& c);

/// Alternating sum of the stabilizers' tuple-orbit counts.
Integer chi_kn_cells(const ProperCellStructure& c, std::uint64_t p, std::size_t n,
                     const CensusOptions& options = {});
Rational chi_orb_cells(const ProperCellStructure& c);
Integer chi_q_cells(const ProperCellStructure& c);

/// Bass-Serre tree of H *_K L: 0-cells H and L, one 1-cell K.
/// `into_h` and `into_l` are images of minimal_generating_sequence(k); both must
/// extend to injective homomorphisms. Throws InvalidEmbedding.
ProperCellStructure amalgam(const FiniteGroup& h, const FiniteGroup& l, const FiniteGroup& k,
                            const std::vector<ElementId>& into_h, const std::vector<ElementId>& into_l,
                            std::string label = "");

/// As above with some embedding of K into each factor found by search.
/// Throws InvalidEmbedding when K does not embed.
ProperCellStructure amalgam(const FiniteGroup& h, const FiniteGroup& l, const FiniteGroup& k,
                            std::string label = "");

/// Soule's complex for SL3(Z).
ProperCellStructure soule_sl3();
/// C6 *_C2 C4
ProperCellStructure sl2z_tree();
/// D8 *_C4 D8
ProperCellStructure dihedral_amalgam();
/// D8 *_(C2xC2) D12
ProperCellStructure gl2z_tree();

std::vector<std::string> builtin_cell_structures();
/// Throws UnknownSpec.
ProperCellStructure builtin_cell_structure(const std::string& name);

/// {"label": ..., "cells": [{"dim": d, "stabilizer": spec, "multiplicity": m}]}
nlohmann::json to_json(const ProperCellStructure& c);
ProperCellStructure cell_structure_from_json(const nlohmann::json& j);
/// Built-in name, or path to a JSON file. Throws ParseError / UnknownSpec.
ProperCellStructure load_cell_structure(const std::string& name_or_path);

}  // namespace chromatic
