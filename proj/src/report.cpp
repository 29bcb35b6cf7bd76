#include "chromatic/report.hpp"

#include "chromatic/burnside.hpp"
#include "chromatic/error.hpp"

namespace chromatic {

namespace {

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

ReportSummand even_summand(std::string centralizer, Integer count) {
  return {std::move(centralizer), std::move(count), Integer(1), Integer(0), Rational(1)};
}

ReportSummand torus_summand(std::string centralizer, Integer count, std::size_t dim) {
  // H^*((S^1)^d) has 2^(d-1) classes in each parity for d >= 1.
  const Integer half = dim == 0 ? Integer(1) : ipow(Integer(2), dim - 1);
  return {std::move(centralizer), std::move(count), half, dim == 0 ? Integer(0) : half, Rational(dim == 0 ? 1 : 0)};
}

ReportSummand base_summand(const Rational& chi_q) {
  return {"trivial tuple: the group itself", Integer(1), std::nullopt, std::nullopt, chi_q};
}

void finish(CharacterReport& r) {
  r.summand_count = 0;
  for (const auto& s : r.summands) r.summand_count += s.count;
}

}  // namespace

CharacterReport character_report(const FiniteGroup& g, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  CharacterReport r;
  r.target = group_spec(g);
  r.prime = p;
  r.height = n;
  const BurnsideClass shifted = p_shift(class_of(g), p, n, options);
  for (const auto& [id, count] : shifted.sorted_terms()) r.summands.push_back(even_summand(basis_name(id), count));
  finish(r);
  r.chi_kn = Rational(r.summand_count);
  return r;
}

CharacterReport character_report(const Graph& l, std::size_t n, const std::string& label) {
  CharacterReport r;
  r.target = label;
  r.prime = 2;
  r.height = n;
  const SphericalProfile s = clique_census(l);
  const Integer base = ipow(Integer(2), n) - 1;
  Integer power = 1;
  for (std::size_t size = 0; size < s.counts.size(); ++size, power *= base) {
    const Integer count = s.counts[size] * power;
    if (count == 0) continue;
    r.summands.push_back(even_summand("tuples on a spherical subset of size " + std::to_string(size), count));
  }
  finish(r);
  r.chi_kn = Rational(r.summand_count);
  return r;
}

CharacterReport character_report(const ClosedFormTarget& t, std::size_t n) {
  CharacterReport r;
  r.target = t.name;
  r.prime = t.prime;
  r.height = n;
  r.chi_kn = evaluate_closed_form(t, static_cast<long>(n));
  const Rational chi_q = closed_form_chi_q(t);
  const auto& j = t.parameters;
  const Integer pn_minus_1 = ipow(big(t.prime), n) - 1;

  if (t.kind == "exponential") {
    r.summands.push_back(even_summand("finite or rationally acyclic centralizers", to_integer(r.chi_kn)));
    finish(r);
    return r;
  }

  r.summands.push_back(base_summand(chi_q));
  if (!t.cohomology_known) r.notes.push_back("rational cohomology of the group is not in the input data; only chi_Q is");

  if (t.kind == "sl2_ok") {
    Integer extra = 0;
    for (const auto& h : j.at("maximal")) {
      const auto d = cyclic_datum(h.at("order").get<std::uint64_t>(), h.value("multiplicity", std::uint64_t{1}), t.prime);
      extra += big(d.multiplicity) * (ipow(big(d.p_part_order), n) - 1);
    }
    if (extra != 0) r.summands.push_back(even_summand("finite subgroups of maximal finite subgroups", extra));
  } else if (t.kind == "sl2_ok_p2") {
    r.summands.push_back({"nontrivial tuples (not resolved by centralizer)", Integer(1), std::nullopt, std::nullopt,
                          r.chi_kn - chi_q});
    r.notes.push_back("at p = 2 only the total contribution of nontrivial tuples is known");
  } else if (t.kind == "crystallographic") {
    const bool free_action = j.at("free_action").get<bool>();
    const Integer rr = Integer(j.at("r").get<long>());
    if (free_action && rr > 0) {
      r.summands.push_back(even_summand("Z/" + std::to_string(t.prime) + " (self-normalizing)", rr * pn_minus_1));
    } else if (rr > 0) {
      r.notes.push_back("nontrivial tuples have centralizers Z/p x Z^l with l >= 1; they contribute chi_Q = 0");
    }
  } else if (t.kind == "gl" || t.kind == "sl") {
    const TorusSplitting split = t.kind == "gl"
                                     ? chi_gl_pminus1(t.prime, n, chi_q, Integer(j.at("class_number").get<long>()))
                                     : chi_sl_pminus1(t.prime, n, chi_q, Integer(j.at("class_number").get<long>()));
    if (split.summands != 0)
      r.summands.push_back(torus_summand("Z/" + std::to_string(t.prime) + " x Z/2 x Z^" + std::to_string(split.torus_dim),
                                         split.summands, split.torus_dim));
  } else if (t.kind == "sp") {
    const Integer count = sp_pminus1_summands(t.prime, n, Integer(j.at("h_minus").get<long>()));
    if (count != 0) r.summands.push_back(even_summand("Z/" + std::to_string(t.prime) + " x Z/2", count));
  } else if (t.kind == "mapping_class") {
    const Integer count = pn_minus_1 * (big(t.prime) + 1) / 6;
    if (count != 0) r.summands.push_back(even_summand("finite centralizer of an order-p subgroup", count));
  } else {
    throw UnknownSpec("no character report for closed-form kind '" + t.kind + "'");
  }
  finish(r);
  return r;
}

nlohmann::json to_json(const CharacterReport& r) {
  auto number = [](const Integer& v) -> nlohmann::json {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
  };
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : r.summands) {
    nlohmann::json entry{{"centralizer", s.centralizer}, {"count", number(s.count)}, {"euler", to_string(s.euler)}};
    entry["even_rank"] = s.even_rank ? number(*s.even_rank) : nlohmann::json(nullptr);
    entry["odd_rank"] = s.odd_rank ? number(*s.odd_rank) : nlohmann::json(nullptr);
    summands.push_back(entry);
  }
  nlohmann::json out{{"target", r.target},
                     {"prime", r.prime},
                     {"height", r.height},
                     {"summand_count", number(r.summand_count)},
                     {"chi_kn", to_string(r.chi_kn)},
                     {"summands", summands}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

}  // namespace chromatic
