#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromatic/numeric.hpp"

namespace chromatic {

/// `multiplicity` conjugacy classes of maximal finite subgroups H with
/// |H| = order and |H_(p)| = p_part_order.
struct MaximalSubgroupDatum {
  std::uint64_t order = 1;
  std::uint64_t p_part_order = 1;
  std::uint64_t multiplicity = 1;
};

/// Datum for a cyclic subgroup of the given order at the prime p.
MaximalSubgroupDatum cyclic_datum(std::uint64_t order, std::uint64_t multiplicity, std::uint64_t p);

/// 2 zeta + sum_(H) (|H_(p)|^n - 2/|H|) for SL2 over a totally real ring of
/// integers. Throws EvenPrime for p = 2, NotPrime, InvalidArgument on bad data.
Rational chi_sl2_ok(std::uint64_t p, std::size_t n, const Rational& zeta,
                    const std::vector<MaximalSubgroupDatum>& maximal);

/// 2^(n+1) zeta + sum_(H) (|H_(2)|^n - 2^(n+1)/|H|)
Rational chi_sl2_ok_p2(std::size_t n, const Rational& zeta, const std::vector<MaximalSubgroupDatum>& maximal);

/// Z^m semidirect Z/p with r conjugacy classes of order-p subgroups.
/// Free action on Z^m - 0: r p^n - r/p. Nontrivial fixed points, or r = 0: 0.
/// n = -1 is allowed. Throws InvalidArgument if both flags are set, or if
/// r > 0 and neither is.
Rational chi_crystallographic(std::uint64_t p, long n, const Integer& r, bool free_action, bool fixed_points);

/// Number of summands beyond the trivial tuple and the torus rank of each.
struct TorusSplitting {
  Rational chi_kn;
  Integer summands;
  std::size_t torus_dim = 0;
};

/// GL_{p-1}(Z), p >= 5: chi = chi_q, (p^n - 1)/(p - 1) |Cl| torus summands.
TorusSplitting chi_gl_pminus1(std::uint64_t p, std::size_t n, const Rational& chi_q, const Integer& class_number);
/// SL_{p-1}(Z), p >= 5: as GL with twice the summands.
TorusSplitting chi_sl_pminus1(std::uint64_t p, std::size_t n, const Rational& chi_q, const Integer& class_number);

/// Sp_{p-1}(Z): chi_q + 2^((p-1)/2) h^- (p^n - 1)/(p - 1). Throws EvenPrime.
Rational chi_sp_pminus1(std::uint64_t p, std::size_t n, const Rational& chi_q, const Integer& h_minus);
/// Number of order-p summands of chi_sp_pminus1.
Integer sp_pminus1_summands(std::uint64_t p, std::size_t n, const Integer& h_minus);

/// Mapping class group of genus (p-1)/2, p >= 5: chi_q + (p^n - 1)(p + 1)/6.
Rational chi_mapping_class(std::uint64_t p, std::size_t n, const Rational& chi_q);

/// sum c_i b_i^n
struct ExponentialTerm {
  Rational coefficient;
  Integer base;
};
Rational exponential_sum(const std::vector<ExponentialTerm>& terms, std::size_t n);

/// A named entry of the bundled constants file.
struct ClosedFormTarget {
  std::string name;
  /// sl2_ok, sl2_ok_p2, crystallographic, gl, sl, sp, mapping_class, exponential
  std::string kind;
  std::uint64_t prime = 0;
  std::string description;
  std::string provenance;
  /// False when only chi_q is known, not the rational cohomology itself.
  bool cohomology_known = true;
  nlohmann::json parameters;
};

/// The constants file compiled into the library.
const nlohmann::json& bundled_constants();
std::vector<std::string> closed_form_names();
/// Throws UnknownSpec.
ClosedFormTarget closed_form_target(const std::string& name);
ClosedFormTarget closed_form_from_json(const std::string& name, const nlohmann::json& entry);

/// chi_{K(n)} at the target's prime. n = -1 is defined only for
/// crystallographic targets; otherwise throws HeightUndefined.
Rational evaluate_closed_form(const ClosedFormTarget& target, long n);
/// chi_Q(BG) stored for the target.
Rational closed_form_chi_q(const ClosedFormTarget& target);
bool closed_form_has_orbifold_row(const ClosedFormTarget& target);

}  // namespace chromatic
