#include "chromatic/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "chromatic/error.hpp"
#include "union_find.hpp"

namespace chromatic {

namespace {

std::atomic<std::size_t> g_max_order{kDefaultMaxOrder};

using detail::UnionFind;

}  // namespace

std::size_t max_order() { return g_max_order.load(); }

void set_max_order(std::size_t bound) {
  if (bound == 0) throw InvalidArgument("max order must be positive");
  g_max_order.store(bound);
}

struct FiniteGroup::Data {
  std::size_t degree = 1;
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::unordered_map<Permutation, ElementId, PermutationHash> index;
  std::vector<ElementId> table;
  std::vector<ElementId> inverses;
  std::vector<std::size_t> orders;
  ConjugacyClasses classes;
  std::vector<std::size_t> class_of;
  bool abelian = true;

  std::size_t n() const { return elements.size(); }
  ElementId mul(ElementId a, ElementId b) const { return table[std::size_t(a) * n() + b]; }

  // Everything derivable from the multiplication table.
  void finalize() {
    const std::size_t size = n();
    index.reserve(size);
    for (std::size_t i = 0; i < size; ++i) index.emplace(elements[i], static_cast<ElementId>(i));

    inverses.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (mul(ElementId(i), ElementId(j)) == 0) {
          inverses[i] = ElementId(j);
          break;
        }
      }
    }

    orders.assign(size, 1);
    for (std::size_t i = 1; i < size; ++i) {
      ElementId x = ElementId(i);
      std::size_t k = 1;
      while (x != 0) {
        x = mul(x, ElementId(i));
        ++k;
      }
      orders[i] = k;
    }

    std::vector<ElementId> gens;
    for (const auto& g : generators) gens.push_back(index.at(g));

    UnionFind uf(size);
    for (std::size_t x = 0; x < size; ++x)
      for (ElementId g : gens) uf.unite(x, mul(mul(inverses[g], ElementId(x)), g));

    std::map<std::size_t, std::size_t> root_to_class;
    class_of.assign(size, 0);
    for (std::size_t x = 0; x < size; ++x) {
      std::size_t root = uf.find(x);
      auto [it, inserted] = root_to_class.emplace(root, classes.classes.size());
      if (inserted) {
        classes.classes.emplace_back();
        classes.representatives.push_back(ElementId(root));
      }
      classes.classes[it->second].push_back(ElementId(x));
      class_of[x] = it->second;
    }
    for (const auto& c : classes.classes) classes.class_sizes.push_back(c.size());

    abelian = true;
    for (std::size_t a = 0; a < gens.size() && abelian; ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        if (mul(gens[a], gens[b]) != mul(gens[b], gens[a])) {
          abelian = false;
          break;
        }
  }
};

FiniteGroup::FiniteGroup() : FiniteGroup(closure({}, 1)) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

std::size_t FiniteGroup::order() const { return data_->n(); }
std::size_t FiniteGroup::degree() const { return data_->degree; }
const std::vector<Permutation>& FiniteGroup::elements() const { return data_->elements; }
const Permutation& FiniteGroup::element(ElementId id) const { return data_->elements.at(id); }
const std::vector<Permutation>& FiniteGroup::generators() const { return data_->generators; }

const std::string& FiniteGroup::name() const { return name_; }
bool FiniteGroup::has_name() const { return !name_.empty(); }

FiniteGroup FiniteGroup::with_name(std::string name) const {
  FiniteGroup g(*this);
  g.name_ = std::move(name);
  return g;
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const { return data_->mul(a, b); }
ElementId FiniteGroup::inverse(ElementId a) const { return data_->inverses[a]; }

ElementId FiniteGroup::conjugate(ElementId x, ElementId g) const {
  return data_->mul(data_->mul(data_->inverses[g], x), g);
}

bool FiniteGroup::commute(ElementId a, ElementId b) const { return data_->mul(a, b) == data_->mul(b, a); }
std::size_t FiniteGroup::element_order(ElementId a) const { return data_->orders[a]; }

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw ElementNotInGroup("permutation " + p.to_cycle_string() + " is not in the group");
  return *id;
}

std::vector<ElementId> FiniteGroup::generator_ids() const {
  std::vector<ElementId> out;
  for (const auto& g : data_->generators) out.push_back(data_->index.at(g));
  return out;
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const { return data_->classes; }
std::size_t FiniteGroup::class_index(ElementId a) const { return data_->class_of[a]; }

std::size_t FiniteGroup::centralizer_order(ElementId a) const {
  return order() / data_->classes.class_sizes[data_->class_of[a]];
}

bool FiniteGroup::is_abelian() const { return data_->abelian; }

FiniteGroup FiniteGroup::subgroup(std::vector<ElementId> ids) const {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty() || ids.front() != 0) throw InvalidArgument("subgroup must contain the identity");

  const std::size_t n = data_->n();
  std::vector<ElementId> position(n, kNoImage);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= n) throw ElementNotInGroup("element id out of range");
    position[ids[i]] = ElementId(i);
  }

  auto sub = std::make_shared<Data>();
  sub->degree = data_->degree;
  const std::size_t k = ids.size();
  sub->elements.reserve(k);
  for (ElementId id : ids) sub->elements.push_back(data_->elements[id]);
  sub->table.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      ElementId prod = position[data_->mul(ids[i], ids[j])];
      if (prod == kNoImage) throw InvalidArgument("element set is not closed under multiplication");
      sub->table[i * k + j] = prod;
    }
  }

  // Greedy generating sequence, computed on the table before finalize().
  std::vector<bool> in_closure(k, false);
  in_closure[0] = true;
  std::vector<ElementId> gens;
  for (std::size_t x = 1; x < k; ++x) {
    if (in_closure[x]) continue;
    gens.push_back(ElementId(x));
    std::vector<ElementId> members{0};
    std::fill(in_closure.begin(), in_closure.end(), false);
    in_closure[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (ElementId g : gens) {
        ElementId y = sub->table[std::size_t(members[head]) * k + g];
        if (!in_closure[y]) {
          in_closure[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  for (ElementId g : gens) sub->generators.push_back(sub->elements[g]);
  sub->finalize();
  return FiniteGroup(std::move(sub));
}

FiniteGroup closure(const std::vector<Permutation>& generators, std::size_t degree, std::size_t bound) {
  if (!generators.empty()) degree = generators.front().degree();
  if (degree == 0) degree = 1;
  for (const auto& g : generators)
    if (g.degree() != degree) throw InvalidPermutation("generators do not share a degree");

  std::vector<Permutation> gens;
  for (const auto& g : generators)
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

  // Breadth-first Cayley graph walk; every non-identity element remembers the
  // (parent, generator) edge that reached it.
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{found[0], 0}};
  std::vector<std::size_t> parent{0}, via{0};
  std::vector<std::size_t> right;  // right[t * |gens| + s] = t * gens[s]
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = found[head] * gens[s];
      auto [it, inserted] = seen.emplace(y, found.size());
      if (inserted) {
        if (found.size() >= bound)
          throw ClosureExceedsBound("group order exceeds the bound " + std::to_string(bound));
        found.push_back(std::move(y));
        parent.push_back(head);
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = found.size();
  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<ElementId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[sorted[i]] = ElementId(i);

  auto data = std::make_shared<FiniteGroup::Data>();
  data->degree = degree;
  data->generators = gens;
  data->elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data->elements.push_back(found[sorted[i]]);

  // Row a of the table: a * w follows the BFS word for w one generator at a time.
  const std::size_t k = gens.size();
  data->table.assign(n * n, 0);
  std::vector<std::size_t> row(n);  // in BFS numbering
  for (std::size_t a = 0; a < n; ++a) {
    row[0] = a;
    for (std::size_t t = 1; t < n; ++t) row[t] = right[row[parent[t]] * k + via[t]];
    const std::size_t ra = rank[a];
    for (std::size_t t = 0; t < n; ++t) data->table[ra * n + rank[t]] = rank[row[t]];
  }
  data->finalize();
  return FiniteGroup(std::move(data));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }

std::vector<ElementId> centralizer_ids(const FiniteGroup& g, std::span<const ElementId> s) {
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementId y : s) {
      if (y >= g.order()) throw ElementNotInGroup("element id out of range");
      if (!g.commute(ElementId(x), y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(ElementId(x));
  }
  return out;
}

namespace {

std::vector<ElementId> ids_of(const FiniteGroup& g, std::span<const Permutation> s) {
  std::vector<ElementId> ids;
  for (const auto& p : s) ids.push_back(g.index_of(p));
  return ids;
}

}  // namespace

FiniteGroup centralizer(const FiniteGroup& g, std::span<const ElementId> s) {
  return g.subgroup(centralizer_ids(g, s));
}

FiniteGroup centralizer(const FiniteGroup& g, std::span<const Permutation> s) {
  auto ids = ids_of(g, s);
  return centralizer(g, std::span<const ElementId>(ids));
}

std::vector<ElementId> closure_ids(const FiniteGroup& g, std::span<const ElementId> s) {
  std::vector<bool> member(g.order(), false);
  std::vector<ElementId> out{0};
  member[0] = true;
  for (ElementId y : s)
    if (y >= g.order()) throw ElementNotInGroup("element id out of range");
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (ElementId y : s) {
      ElementId z = g.multiply(out[head], y);
      if (!member[z]) {
        member[z] = true;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup subgroup_generated(const FiniteGroup& g, std::span<const ElementId> s) {
  return g.subgroup(closure_ids(g, s));
}

FiniteGroup subgroup_generated(const FiniteGroup& g, std::span<const Permutation> s) {
  auto ids = ids_of(g, s);
  return subgroup_generated(g, std::span<const ElementId>(ids));
}

std::vector<ElementId> center_ids(const FiniteGroup& g) {
  auto gens = g.generator_ids();
  return centralizer_ids(g, gens);
}

std::vector<ElementId> derived_subgroup_ids(const FiniteGroup& g) {
  auto gens = g.generator_ids();
  std::vector<ElementId> seeds;
  for (ElementId a : gens)
    for (ElementId b : gens) {
      ElementId c = g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
      if (c != 0) seeds.push_back(c);
    }
  // Normal closure: keep adding conjugates until the closure is stable.
  while (true) {
    auto ids = closure_ids(g, seeds);
    std::vector<bool> member(g.order(), false);
    for (ElementId x : ids) member[x] = true;
    bool grew = false;
    for (std::size_t i = 0, n = seeds.size(); i < n; ++i)
      for (ElementId h : gens) {
        ElementId c = g.conjugate(seeds[i], h);
        if (!member[c]) {
          member[c] = true;
          seeds.push_back(c);
          grew = true;
        }
      }
    if (!grew) return ids;
  }
}

std::vector<ElementId> minimal_generating_sequence(const FiniteGroup& g) {
  std::vector<ElementId> gens;
  std::vector<bool> member(g.order(), false);
  member[0] = true;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (member[x]) continue;
    gens.push_back(ElementId(x));
    for (ElementId y : closure_ids(g, gens)) member[y] = true;
  }
  return gens;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t degree = g.degree() + h.degree();
  if (g.order() * h.order() > max_order())
    throw ClosureExceedsBound("product order " + std::to_string(g.order() * h.order()) +
                              " exceeds the bound " + std::to_string(max_order()));
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.extended(degree));
  for (const auto& y : h.generators()) gens.push_back(y.shifted(g.degree(), degree));
  FiniteGroup out = closure(gens, degree);
  if (g.has_name() && h.has_name()) out = out.with_name(g.name() + "x" + h.name());
  return out;
}

std::optional<std::vector<ElementId>> extend_homomorphism(const FiniteGroup& source,
                                                          std::span<const ElementId> gens,
                                                          const FiniteGroup& target,
                                                          std::span<const ElementId> images) {
  if (gens.size() != images.size()) throw InvalidArgument("generator and image counts differ");
  std::vector<ElementId> map(source.order(), kNoImage);
  map[0] = 0;
  std::vector<ElementId> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementId x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const ElementId y = source.multiply(x, gens[i]);
      const ElementId image = target.multiply(map[x], images[i]);
      if (map[y] == kNoImage) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

bool injective_on_domain(const std::vector<ElementId>& map, std::size_t target_order) {
  std::vector<bool> hit(target_order, false);
  for (ElementId y : map) {
    if (y == kNoImage) continue;
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

// Calls visit(images) for every injective hom k -> g, given by the images of
// gens; stops early when visit returns false.
template <class Visit>
void enumerate_monomorphisms(const FiniteGroup& k, const std::vector<ElementId>& gens,
                             const FiniteGroup& g, bool same_class_sizes, Visit&& visit) {
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (g.element_order(ElementId(y)) != k.element_order(gens[i])) continue;
      if (same_class_sizes && g.centralizer_order(ElementId(y)) != k.centralizer_order(gens[i])) continue;
      candidates[i].push_back(ElementId(y));
    }
  }
  std::vector<ElementId> images;
  bool stop = false;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      if (!visit(images)) stop = true;
      return;
    }
    for (ElementId y : candidates[depth]) {
      images.push_back(y);
      std::span<const ElementId> prefix(gens.data(), depth + 1);
      auto map = extend_homomorphism(k, prefix, g, images);
      if (map && injective_on_domain(*map, g.order())) self(self, depth + 1);
      images.pop_back();
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::size_t monomorphism_classes(const FiniteGroup& k, const FiniteGroup& g) {
  if (g.order() % k.order() != 0) return 0;
  const auto gens = minimal_generating_sequence(k);
  const std::size_t width = gens.size();
  if (width == 0) return 1;

  std::vector<ElementId> flat;
  enumerate_monomorphisms(k, gens, g, false, [&](const std::vector<ElementId>& images) {
    flat.insert(flat.end(), images.begin(), images.end());
    return true;
  });
  const std::size_t count = flat.size() / width;
  if (count == 0) return 0;

  // The enumeration is lexicographic in the candidate order, hence sorted.
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

  UnionFind uf(count);
  const auto conj_by = g.generator_ids();
  std::vector<ElementId> image(width);
  for (std::size_t i = 0; i < count; ++i) {
    for (ElementId h : conj_by) {
      for (std::size_t j = 0; j < width; ++j) image[j] = g.conjugate(flat[i * width + j], h);
      uf.unite(i, locate(image));
    }
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < count; ++i)
    if (uf.find(i) == i) ++orbits;
  return orbits;
}

std::optional<std::vector<ElementId>> find_monomorphism(const FiniteGroup& k, const FiniteGroup& g) {
  if (g.order() % k.order() != 0) return std::nullopt;
  const auto gens = minimal_generating_sequence(k);
  std::optional<std::vector<ElementId>> found;
  enumerate_monomorphisms(k, gens, g, false, [&](const std::vector<ElementId>& images) {
    found = images;
    return false;
  });
  return found;
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  for (std::size_t x = 0; x < g.order(); ++x) ++f.element_order_histogram[g.element_order(ElementId(x))];
  f.class_size_multiset = g.conjugacy_classes().class_sizes;
  std::sort(f.class_size_multiset.begin(), f.class_size_multiset.end());
  f.abelian = g.is_abelian();
  f.center_order = center_ids(g).size();
  FiniteGroup current = g;
  f.derived_series_orders.push_back(current.order());
  while (current.order() > 1) {
    auto ids = derived_subgroup_ids(current);
    if (ids.size() == current.order()) break;
    current = current.subgroup(std::move(ids));
    f.derived_series_orders.push_back(current.order());
  }
  return f;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  const GroupFingerprint fg = fingerprint(g), fh = fingerprint(h);
  if (fg != fh) return false;
  // Abelian groups are determined by their element-order histogram.
  if (fg.abelian) return true;
  bool found = false;
  enumerate_monomorphisms(g, minimal_generating_sequence(g), h, true, [&](const std::vector<ElementId>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace chromatic
