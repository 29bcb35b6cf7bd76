#include "chromatic/census.hpp"

#include <algorithm>
#include <future>

#include "chromatic/error.hpp"
#include "union_find.hpp"

namespace chromatic {

std::vector<ElementId> p_power_elements(const FiniteGroup& g, std::uint64_t p) {
  require_prime(p);
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (p_part(g.element_order(ElementId(x)), p) == g.element_order(ElementId(x))) out.push_back(ElementId(x));
  return out;
}

namespace {

// Commuting tuples with entry i drawn from candidates[i], in lexicographic
// order, flattened.
std::vector<ElementId> enumerate_commuting(const FiniteGroup& g,
                                           const std::vector<std::vector<ElementId>>& candidates,
                                           std::size_t cap) {
  const std::size_t width = candidates.size();
  std::vector<ElementId> flat;
  if (width == 0) return flat;
  std::vector<ElementId> tuple;
  std::size_t count = 0;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == width) {
      if (++count > cap)
        throw CensusTooLarge("more than " + std::to_string(cap) + " commuting tuples");
      flat.insert(flat.end(), tuple.begin(), tuple.end());
      return;
    }
    for (ElementId x : candidates[depth]) {
      bool ok = true;
      for (ElementId y : tuple)
        if (!g.commute(x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      tuple.push_back(x);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  recurse(recurse, 0);
  return flat;
}

TupleCensus partition_orbits(const FiniteGroup& g, std::uint64_t p, std::size_t arity, bool extended,
                             const std::vector<std::vector<ElementId>>& candidates, std::size_t cap) {
  TupleCensus census{g, p, arity, extended, 0, {}, {}, {}};
  const std::size_t width = candidates.size();
  if (width == 0) {
    census.tuple_count = 1;
    census.orbit_reps.push_back({});
    census.orbit_sizes.push_back(1);
    census.centralizers.push_back(g);
    return census;
  }
  const std::vector<ElementId> flat = enumerate_commuting(g, candidates, cap);
  const std::size_t count = flat.size() / width;
  census.tuple_count = count;

  auto locate = [&](const std::vector<ElementId>& t) {
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (std::lexicographical_compare(flat.begin() + mid * width, flat.begin() + (mid + 1) * width,
                                       t.begin(), t.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };

  detail::UnionFind uf(count);
  const auto gens = g.generator_ids();
  std::vector<ElementId> image(width);
  for (std::size_t i = 0; i < count; ++i) {
    for (ElementId h : gens) {
      for (std::size_t j = 0; j < width; ++j) image[j] = g.conjugate(flat[i * width + j], h);
      uf.unite(i, locate(image));
    }
  }

  std::vector<std::size_t> slot(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t root = uf.find(i);
    if (root == i) {
      slot[i] = census.orbit_reps.size();
      census.orbit_reps.emplace_back(flat.begin() + i * width, flat.begin() + (i + 1) * width);
      census.orbit_sizes.push_back(0);
    }
    ++census.orbit_sizes[slot[root]];
  }
  for (const auto& rep : census.orbit_reps) census.centralizers.push_back(centralizer(g, std::span(rep)));
  return census;
}

Integer count_recursive(const FiniteGroup& g, std::uint64_t p, std::size_t n) {
  if (n == 0) return 1;
  const auto elems = p_power_elements(g, p);
  // Abelian: conjugation is trivial and every tuple commutes.
  if (g.is_abelian()) return ipow(Integer(static_cast<unsigned long>(elems.size())), n);

  const auto& classes = g.conjugacy_classes();
  Integer central = 0;
  Integer total = 0;
  for (std::size_t c = 0; c < classes.representatives.size(); ++c) {
    const ElementId rep = classes.representatives[c];
    const std::size_t order = g.element_order(rep);
    if (p_part(order, p) != order) continue;
    if (classes.class_sizes[c] == 1) {
      ++central;
      continue;
    }
    const ElementId one[] = {rep};
    total += count_recursive(centralizer(g, std::span<const ElementId>(one)), p, n - 1);
  }
  // Central entries leave the centralizer equal to G.
  if (central != 0) total += central * count_recursive(g, p, n - 1);
  return total;
}

}  // namespace

TupleCensus census_naive(const FiniteGroup& g, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  const auto elems = p_power_elements(g, p);
  std::vector<std::vector<ElementId>> candidates(n, elems);
  return partition_orbits(g, p, n, false, candidates, options.tuple_cap);
}

ExtendedTupleCensus census_extended(const FiniteGroup& g, std::uint64_t p, std::size_t n,
                                    const CensusOptions& options) {
  const auto elems = p_power_elements(g, p);
  std::vector<ElementId> all(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) all[x] = ElementId(x);
  std::vector<std::vector<ElementId>> candidates(n + 1, elems);
  candidates[0] = all;
  return partition_orbits(g, p, n, true, candidates, options.tuple_cap);
}

Integer census_recursive(const FiniteGroup& g, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  require_prime(p);
  if (n == 0 || options.threads <= 1 || g.is_abelian()) return count_recursive(g, p, n);

  // Same recursion, with the top-level branches spread over worker threads.
  const auto& classes = g.conjugacy_classes();
  std::vector<ElementId> branches;
  for (ElementId rep : classes.representatives) {
    const std::size_t order = g.element_order(rep);
    if (p_part(order, p) == order) branches.push_back(rep);
  }
  const unsigned workers = std::min<unsigned>(options.threads, static_cast<unsigned>(branches.size()));
  std::vector<std::future<Integer>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      Integer sum = 0;
      for (std::size_t b = w; b < branches.size(); b += workers) {
        const ElementId one[] = {branches[b]};
        sum += count_recursive(centralizer(g, std::span<const ElementId>(one)), p, n - 1);
      }
      return sum;
    }));
  }
  Integer total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

Integer chi_kn_finite(const FiniteGroup& g, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  return census_recursive(g, p, n, options);
}

}  // namespace chromatic
