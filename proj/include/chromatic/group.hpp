#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromatic/permutation.hpp"

namespace chromatic {

/// Index of an element in a group's sorted element list. The identity is 0.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 5000;

/// Process-wide bound on constructed group orders.
std::size_t max_order();
void set_max_order(std::size_t bound);

struct ConjugacyClasses {
  std::vector<std::vector<ElementId>> classes;
  std::vector<ElementId> representatives;
  std::vector<std::size_t> class_sizes;
};

/// A finite permutation group with its full element list, multiplication
/// table and conjugacy classes computed at construction.
///
/// Elements are sorted lexicographically by image sequence. Copies share the
/// immutable state, so passing by value is cheap.
class FiniteGroup {
 public:
  /// The trivial group on one point.
  FiniteGroup();

  std::size_t order() const;
  std::size_t degree() const;

  const std::vector<Permutation>& elements() const;
  const Permutation& element(ElementId id) const;
  const std::vector<Permutation>& generators() const;

  const std::string& name() const;
  bool has_name() const;
  FiniteGroup with_name(std::string name) const;

  static constexpr ElementId identity() { return 0; }

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  /// g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const;
  bool commute(ElementId a, ElementId b) const;
  std::size_t element_order(ElementId a) const;

  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws ElementNotInGroup.
  ElementId index_of(const Permutation& p) const;

  /// Indices of the stored generators.
  std::vector<ElementId> generator_ids() const;

  const ConjugacyClasses& conjugacy_classes() const;
  /// Index into conjugacy_classes().classes of the class containing `a`.
  std::size_t class_index(ElementId a) const;
  /// |C_G(a)|
  std::size_t centralizer_order(ElementId a) const;

  bool is_abelian() const;

  /// The subgroup on the given (closed) set of element ids.
  FiniteGroup subgroup(std::vector<ElementId> ids) const;

  struct Data;

 private:
  explicit FiniteGroup(std::shared_ptr<const Data> data);
  friend FiniteGroup closure(const std::vector<Permutation>&, std::size_t, std::size_t);

  std::shared_ptr<const Data> data_;
  std::string name_;
};

/// Group generated by `generators` acting on `degree` points (degree is taken
/// from the generators when they are given). Throws ClosureExceedsBound.
FiniteGroup closure(const std::vector<Permutation>& generators, std::size_t degree = 1,
                    std::size_t bound = max_order());

/// Parses a group spec: Cn, Dn (order n), Sn, An, Q8, perm:(..),(..), joined by x.
/// Throws UnknownSpec.
FiniteGroup standard_group(const std::string& spec);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// {x : xs = sx for all s in S}. Throws ElementNotInGroup.
FiniteGroup centralizer(const FiniteGroup& g, std::span<const Permutation> s);
FiniteGroup centralizer(const FiniteGroup& g, std::span<const ElementId> s);
std::vector<ElementId> centralizer_ids(const FiniteGroup& g, std::span<const ElementId> s);

FiniteGroup subgroup_generated(const FiniteGroup& g, std::span<const Permutation> s);
FiniteGroup subgroup_generated(const FiniteGroup& g, std::span<const ElementId> s);
/// Sorted ids of <s>.
std::vector<ElementId> closure_ids(const FiniteGroup& g, std::span<const ElementId> s);

std::vector<ElementId> center_ids(const FiniteGroup& g);
std::vector<ElementId> derived_subgroup_ids(const FiniteGroup& g);

/// Greedy: repeatedly adjoin the least element outside the current closure.
std::vector<ElementId> minimal_generating_sequence(const FiniteGroup& g);

/// Acts on the disjoint union of the two point sets.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Extends gens[i] -> images[i] to a homomorphism <gens> -> target.
/// Returns the map on <gens> (other entries are kNoImage), or nullopt if the
/// assignment is not a homomorphism.
inline constexpr ElementId kNoImage = static_cast<ElementId>(-1);
std::optional<std::vector<ElementId>> extend_homomorphism(const FiniteGroup& source,
                                                          std::span<const ElementId> gens,
                                                          const FiniteGroup& target,
                                                          std::span<const ElementId> images);

/// Number of G-conjugacy classes of injective homomorphisms K -> G.
std::size_t monomorphism_classes(const FiniteGroup& k, const FiniteGroup& g);

/// Images of minimal_generating_sequence(k) under some injective hom k -> g.
std::optional<std::vector<ElementId>> find_monomorphism(const FiniteGroup& k,
                                                        const FiniteGroup& g);

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> element_order_histogram;
  std::vector<std::size_t> class_size_multiset;
  bool abelian = false;
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_series_orders;

  auto operator<=>(const GroupFingerprint&) const = default;
  bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Spec string that reconstructs a group isomorphic to g: its name when it
/// parses, otherwise perm: notation of its generators.
std::string group_spec(const FiniteGroup& g);

/// Invariant-factor name for abelian groups ("C4xC2"), otherwise a catalog
/// name if one matches, otherwise empty.
std::string identify(const FiniteGroup& g);

/// Named groups of order <= 48 used by property tests and the acceptance suite.
std::vector<std::string> standard_corpus();

}  // namespace chromatic
