#include "chromatic/closed_forms.hpp"

#include "chromatic/error.hpp"

namespace chromatic {

namespace detail {
extern const char* const kBundledConstants;
}

namespace {

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

void check_datum(const MaximalSubgroupDatum& h, std::uint64_t p) {
  if (h.order == 0) throw InvalidArgument("maximal subgroup order must be positive");
  if (h.p_part_order != p_part(h.order, p))
    throw InvalidArgument("p_part_order " + std::to_string(h.p_part_order) + " is not the " + std::to_string(p) +
                          "-part of " + std::to_string(h.order));
}

void require_at_least_five(std::uint64_t p) {
  require_prime(p);
  if (p < 5) throw InvalidArgument("this closed form needs a prime p >= 5, got " + std::to_string(p));
}

// (p^n - 1) / (p - 1)
Integer geometric(std::uint64_t p, std::size_t n) { return (ipow(big(p), n) - 1) / (big(p) - 1); }

}  // namespace

MaximalSubgroupDatum cyclic_datum(std::uint64_t order, std::uint64_t multiplicity, std::uint64_t p) {
  require_prime(p);
  if (order == 0) throw InvalidArgument("maximal subgroup order must be positive");
  return {order, p_part(order, p), multiplicity};
}

Rational chi_sl2_ok(std::uint64_t p, std::size_t n, const Rational& zeta,
                    const std::vector<MaximalSubgroupDatum>& maximal) {
  require_prime(p);
  if (p == 2) throw EvenPrime("chi_sl2_ok needs an odd prime; use chi_sl2_ok_p2 at p = 2");
  Rational sum = 2 * zeta;
  for (const auto& h : maximal) {
    check_datum(h, p);
    sum += Rational(big(h.multiplicity)) * (Rational(ipow(big(h.p_part_order), n)) - ratio(2, big(h.order)));
  }
  return sum;
}

Rational chi_sl2_ok_p2(std::size_t n, const Rational& zeta, const std::vector<MaximalSubgroupDatum>& maximal) {
  const Integer two_n1 = ipow(Integer(2), n + 1);
  Rational sum = Rational(two_n1) * zeta;
  for (const auto& h : maximal) {
    check_datum(h, 2);
    sum += Rational(big(h.multiplicity)) * (Rational(ipow(big(h.p_part_order), n)) - ratio(two_n1, big(h.order)));
  }
  return sum;
}

Rational chi_crystallographic(std::uint64_t p, long n, const Integer& r, bool free_action, bool fixed_points) {
  require_prime(p);
  if (n < -1) throw InvalidArgument("height must be at least -1");
  if (r < 0) throw InvalidArgument("class count r must be non-negative");
  if (free_action && fixed_points) throw InvalidArgument("the action cannot be both free and have fixed points");
  if (r == 0) return 0;
  if (fixed_points) return 0;
  if (!free_action) throw InvalidArgument("with torsion (r > 0) the action is either free or has fixed points");
  return Rational(r) * rpow(Rational(big(p)), n) - ratio(r, big(p));
}

TorusSplitting chi_gl_pminus1(std::uint64_t p, std::size_t n, const Rational& chi_q, const Integer& class_number) {
  require_at_least_five(p);
  if (class_number <= 0) throw InvalidArgument("class number must be positive");
  return {chi_q, geometric(p, n) * class_number, static_cast<std::size_t>((p - 3) / 2)};
}

TorusSplitting chi_sl_pminus1(std::uint64_t p, std::size_t n, const Rational& chi_q, const Integer& class_number) {
  TorusSplitting out = chi_gl_pminus1(p, n, chi_q, class_number);
  out.summands *= 2;
  return out;
}

Integer sp_pminus1_summands(std::uint64_t p, std::size_t n, const Integer& h_minus) {
  require_prime(p);
  if (p == 2) throw EvenPrime("Sp_{p-1}(Z) needs an odd prime");
  if (h_minus <= 0) throw InvalidArgument("relative class number must be positive");
  return ipow(Integer(2), (p - 1) / 2) * h_minus * geometric(p, n);
}

Rational chi_sp_pminus1(std::uint64_t p, std::size_t n, const Rational& chi_q, const Integer& h_minus) {
  return chi_q + Rational(sp_pminus1_summands(p, n, h_minus));
}

Rational chi_mapping_class(std::uint64_t p, std::size_t n, const Rational& chi_q) {
  require_at_least_five(p);
  return chi_q + ratio((ipow(big(p), n) - 1) * (big(p) + 1), Integer(6));
}

Rational exponential_sum(const std::vector<ExponentialTerm>& terms, std::size_t n) {
  Rational sum = 0;
  for (const auto& t : terms) sum += t.coefficient * Rational(ipow(t.base, n));
  return sum;
}

const nlohmann::json& bundled_constants() {
  static const nlohmann::json constants = nlohmann::json::parse(detail::kBundledConstants);
  return constants;
}

std::vector<std::string> closed_form_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : bundled_constants().items()) names.push_back(name);
  return names;
}

ClosedFormTarget closed_form_from_json(const std::string& name, const nlohmann::json& entry) {
  try {
    ClosedFormTarget t;
    t.name = name;
    t.kind = entry.at("kind").get<std::string>();
    t.prime = entry.at("prime").get<std::uint64_t>();
    t.description = entry.value("description", name);
    t.provenance = entry.value("provenance", "");
    t.cohomology_known = entry.value("cohomology_known", true);
    t.parameters = entry;
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("closed-form entry '" + name + "': " + e.what());
  }
}

ClosedFormTarget closed_form_target(const std::string& name) {
  const auto& constants = bundled_constants();
  if (!constants.contains(name)) throw UnknownSpec("unknown closed-form target '" + name + "'");
  return closed_form_from_json(name, constants.at(name));
}

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  return Rational(Integer(v.get<long>()));
}

Integer integer_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return Integer(v.get<std::string>());
  return Integer(v.get<long>());
}

std::vector<MaximalSubgroupDatum> maximal_field(const nlohmann::json& j, std::uint64_t p) {
  std::vector<MaximalSubgroupDatum> out;
  for (const auto& h : j.at("maximal"))
    out.push_back(cyclic_datum(h.at("order").get<std::uint64_t>(), h.value("multiplicity", std::uint64_t{1}), p));
  return out;
}

}  // namespace

bool closed_form_has_orbifold_row(const ClosedFormTarget& target) { return target.kind == "crystallographic"; }

Rational evaluate_closed_form(const ClosedFormTarget& t, long n) {
  if (n < -1) throw InvalidArgument("height must be at least -1");
  if (n == -1 && !closed_form_has_orbifold_row(t))
    throw HeightUndefined("no orbifold (height -1) value for closed form '" + t.name + "'");
  const auto& j = t.parameters;
  const std::size_t h = static_cast<std::size_t>(n < 0 ? 0 : n);
  try {
    if (t.kind == "sl2_ok") return chi_sl2_ok(t.prime, h, rational_field(j, "zeta"), maximal_field(j, t.prime));
    if (t.kind == "sl2_ok_p2") return chi_sl2_ok_p2(h, rational_field(j, "zeta"), maximal_field(j, 2));
    if (t.kind == "crystallographic")
      return chi_crystallographic(t.prime, n, integer_field(j, "r"), j.at("free_action").get<bool>(),
                                  j.at("fixed_points").get<bool>());
    if (t.kind == "gl") return chi_gl_pminus1(t.prime, h, rational_field(j, "chi_q"), integer_field(j, "class_number")).chi_kn;
    if (t.kind == "sl") return chi_sl_pminus1(t.prime, h, rational_field(j, "chi_q"), integer_field(j, "class_number")).chi_kn;
    if (t.kind == "sp") return chi_sp_pminus1(t.prime, h, rational_field(j, "chi_q"), integer_field(j, "h_minus"));
    if (t.kind == "mapping_class") return chi_mapping_class(t.prime, h, rational_field(j, "chi_q"));
    if (t.kind == "exponential") {
      std::vector<ExponentialTerm> terms;
      for (const auto& term : j.at("terms")) terms.push_back({rational_field(term, "coefficient"), integer_field(term, "base")});
      return exponential_sum(terms, h);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("closed-form entry '" + t.name + "': " + e.what());
  }
  throw UnknownSpec("closed-form entry '" + t.name + "' has unknown kind '" + t.kind + "'");
}

Rational closed_form_chi_q(const ClosedFormTarget& target) { return evaluate_closed_form(target, 0); }

}  // namespace chromatic
