#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromatic/census.hpp"
#include "chromatic/group.hpp"
#include "chromatic/numeric.hpp"

namespace chromatic {

/// Key of an isomorphism class of finite groups in the process-wide registry.
using BasisId = std::uint32_t;

/// Canonical id of the isomorphism class of g. The first group registered in a
/// class becomes its representative.
BasisId basis_id(const FiniteGroup& g);
const FiniteGroup& basis_representative(BasisId id);
/// Stable display name: identify() when it knows the class, else a perm: spec.
const std::string& basis_name(BasisId id);
std::size_t registered_basis_size();

/// An element of the free abelian group on isomorphism classes of finite
/// groups, with the ring structure induced by direct products.
class BurnsideClass {
 public:
  using Terms = std::map<BasisId, Integer>;

  BurnsideClass() = default;

  static BurnsideClass zero() { return {}; }
  /// The class of the trivial group.
  static BurnsideClass unit();
  static BurnsideClass of(const FiniteGroup& g, const Integer& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(BasisId id) const;

  /// Terms sorted by (group order, display name); used for all output.
  std::vector<std::pair<BasisId, Integer>> sorted_terms() const;

  BurnsideClass& operator+=(const BurnsideClass& other);
  BurnsideClass& operator-=(const BurnsideClass& other);
  BurnsideClass& operator*=(const Integer& scalar);
  void add_term(BasisId id, const Integer& coefficient);

  friend BurnsideClass operator+(BurnsideClass a, const BurnsideClass& b) { return a += b; }
  friend BurnsideClass operator-(BurnsideClass a, const BurnsideClass& b) { return a -= b; }
  friend BurnsideClass operator-(BurnsideClass a) { return a *= Integer(-1); }
  friend BurnsideClass operator*(BurnsideClass a, const Integer& k) { return a *= k; }
  friend BurnsideClass operator*(const Integer& k, BurnsideClass a) { return a *= k; }
  friend bool operator==(const BurnsideClass& a, const BurnsideClass& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline BurnsideClass class_of(const FiniteGroup& g) { return BurnsideClass::of(g); }

/// Bilinear extension of [G][K] = [G x K]. Throws ClosureExceedsBound.
BurnsideClass multiply(const BurnsideClass& x, const BurnsideClass& y);

/// sum c / |G|
Rational chi_orb(const BurnsideClass& x);
/// sum c
Integer chi_q(const BurnsideClass& x);
/// sum c * |G \ G_{n,p}|
Integer chi_kn(const BurnsideClass& x, std::uint64_t p, std::size_t n, const CensusOptions& options = {});
/// sum c * #(G-classes of monomorphisms K -> G)
Integer phi_k(const BurnsideClass& x, const FiniteGroup& k);

/// [G] -> sum over conjugacy classes [g] of [C(g)]
BurnsideClass loop(const BurnsideClass& x);
/// [G] -> sum over orbits of G_{n,p} of [C(g_1, ..., g_n)]
BurnsideClass p_shift(const BurnsideClass& x, std::uint64_t p, std::size_t n,
                      const CensusOptions& options = {});

/// "2*D8 - C4", or "0". Parses back through parse_burnside_expression.
std::string to_string(const BurnsideClass& x);

/// Terms `k*SPEC`, `SPEC` or a bare integer k (k copies of the trivial
/// group), joined by + and -. Throws ParseError or UnknownSpec.
BurnsideClass parse_burnside_expression(const std::string& text);

/// [{"group": spec, "coefficient": k}, ...] in sorted_terms() order.
/// Coefficients beyond 64 bits are written as decimal strings.
nlohmann::json to_json(const BurnsideClass& x);
BurnsideClass burnside_from_json(const nlohmann::json& j);

}  // namespace chromatic
