#include "oracles/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace chromatic::oracle {

namespace {

std::size_t order_of(const Permutation& a) {
  std::size_t k = 1;
  for (Permutation x = a; !x.is_identity(); x = x * a) ++k;
  return k;
}

bool is_p_power(std::size_t k, std::uint64_t p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

// Pairwise commutation from products, indexed like g.elements().
std::vector<std::vector<bool>> commutation_matrix(const std::vector<Permutation>& els) {
  std::vector<std::vector<bool>> m(els.size(), std::vector<bool>(els.size()));
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j) m[i][j] = m[j][i] = els[i] * els[j] == els[j] * els[i];
  return m;
}

std::vector<Permutation> span_of(const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<Permutation> out{Permutation::identity(degree)};
  std::map<Permutation, bool> seen{{out[0], true}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : gens) {
      Permutation y = out[i] * s;
      if (seen.emplace(y, true).second) out.push_back(y);
    }
  return out;
}

}  // namespace

std::vector<Permutation> naive_closure(const std::vector<Permutation>& generators, std::size_t degree) {
  return span_of(generators, degree);
}

std::size_t naive_class_count(const FiniteGroup& g) {
  const auto& els = g.elements();
  std::map<Permutation, bool> seen;
  std::size_t classes = 0;
  for (const auto& x : els) {
    if (seen.count(x)) continue;
    ++classes;
    for (const auto& y : els) seen[y.inverse() * x * y] = true;
  }
  return classes;
}

std::vector<Integer> clique_counts_by_subsets(const Graph& l) {
  const std::size_t n = l.vertex_count();
  if (n > 24) throw std::invalid_argument("subset oracle is limited to 24 vertices");
  std::vector<Integer> counts(n + 1, Integer(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool clique = true;
    std::size_t size = 0;
    for (std::size_t u = 0; u < n && clique; ++u) {
      if (!(mask >> u & 1)) continue;
      ++size;
      for (std::size_t v = u + 1; v < n; ++v)
        if ((mask >> v & 1) && !l.has_edge(u, v)) {
          clique = false;
          break;
        }
    }
    if (clique) counts[size] += 1;
  }
  return counts;
}

std::size_t center_order(const FiniteGroup& g) {
  std::size_t count = 0;
  for (const auto& z : g.elements()) {
    bool central = true;
    for (const auto& x : g.elements())
      if (z * x != x * z) {
        central = false;
        break;
      }
    if (central) ++count;
  }
  return count;
}

std::size_t automorphism_count(const FiniteGroup& g) {
  const auto& els = g.elements();
  const std::size_t degree = g.degree();
  // Greedy generating set built from products alone.
  std::vector<Permutation> gens;
  std::vector<Permutation> reached = span_of(gens, degree);
  for (const auto& x : els) {
    if (reached.size() == els.size()) break;
    if (std::find(reached.begin(), reached.end(), x) != reached.end()) continue;
    gens.push_back(x);
    reached = span_of(gens, degree);
  }

  std::vector<std::size_t> orders;
  for (const auto& x : els) orders.push_back(order_of(x));

  std::size_t count = 0;
  std::vector<ElementId> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == gens.size()) {
      // Extend along words in the generators; reject on any conflict.
      std::vector<ElementId> phi(els.size(), kNoImage);
      phi[g.index_of(Permutation::identity(degree))] = g.index_of(Permutation::identity(degree));
      std::vector<ElementId> queue{g.index_of(Permutation::identity(degree))};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const ElementId x = queue[q];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          const ElementId y = g.index_of(els[x] * gens[k]);
          const ElementId fy = g.index_of(els[phi[x]] * els[images[k]]);
          if (phi[y] == kNoImage) {
            phi[y] = fy;
            queue.push_back(y);
          } else if (phi[y] != fy) {
            return;
          }
        }
      }
      std::vector<bool> hit(els.size(), false);
      for (ElementId v : phi) {
        if (hit[v]) return;
        hit[v] = true;
      }
      for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = 0; b < els.size(); ++b)
          if (phi[g.index_of(els[a] * els[b])] != g.index_of(els[phi[a]] * els[phi[b]])) return;
      ++count;
      return;
    }
    const std::size_t want = order_of(gens[i]);
    for (std::size_t c = 0; c < els.size(); ++c) {
      if (orders[c] != want) continue;
      images[i] = static_cast<ElementId>(c);
      assign(i + 1);
    }
  };
  assign(0);
  return count;
}

std::size_t outer_automorphism_count(const FiniteGroup& g) {
  const std::size_t inner = g.order() / center_order(g);
  return automorphism_count(g) / inner;
}

Integer commuting_orbits_by_burnside(const FiniteGroup& g, std::uint64_t p, std::size_t n) {
  const auto& els = g.elements();
  const auto commute = commutation_matrix(els);
  std::vector<std::size_t> p_elements;
  for (std::size_t i = 0; i < els.size(); ++i)
    if (is_p_power(order_of(els[i]), p)) p_elements.push_back(i);

  Integer total = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) {
      total += 1;
      return;
    }
    for (std::size_t c : p_elements) {
      bool ok = true;
      for (std::size_t prior : chosen)
        if (!commute[prior][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      extend(depth + 1);
      chosen.pop_back();
    }
  };
  for (std::size_t x = 0; x < els.size(); ++x) {
    chosen.assign(1, x);
    extend(0);
  }
  const Integer order(static_cast<unsigned long>(g.order()));
  if (total % order != 0) throw std::logic_error("fixed-point count not divisible by |G|");
  return total / order;
}

}  // namespace chromatic::oracle
