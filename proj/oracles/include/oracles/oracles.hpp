#pragma once

// Slow reference computations used only to cross-check the library. Each one
// works from raw permutation products rather than the cached tables.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chromatic/coxeter.hpp"
#include "chromatic/group.hpp"
#include "chromatic/numeric.hpp"

namespace chromatic::oracle {

/// Every product of the generators, found by breadth-first multiplication.
std::vector<Permutation> naive_closure(const std::vector<Permutation>& generators, std::size_t degree);

/// Conjugacy classes counted by conjugating every element by every element.
std::size_t naive_class_count(const FiniteGroup& g);

/// Clique counts by size from testing every vertex subset. At most 24 vertices.
std::vector<Integer> clique_counts_by_subsets(const Graph& l);

std::size_t center_order(const FiniteGroup& g);
/// |Aut(G)| by trying every assignment of images to a generating set.
std::size_t automorphism_count(const FiniteGroup& g);
/// |Aut(G)| / |Inn(G)|
std::size_t outer_automorphism_count(const FiniteGroup& g);

/// |G \ G_{n,p}| by Burnside's lemma: the number of commuting (n+1)-tuples
/// (x, g_1, ..., g_n) with each g_i of p-power order, divided by |G|.
Integer commuting_orbits_by_burnside(const FiniteGroup& g, std::uint64_t p, std::size_t n);

}  // namespace chromatic::oracle
