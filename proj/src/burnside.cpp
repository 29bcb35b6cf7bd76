#include "chromatic/burnside.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "chromatic/error.hpp"

namespace chromatic {

namespace {

struct BasisEntry {
  FiniteGroup representative;
  GroupFingerprint print;
  std::string name;
};

struct Registry {
  std::shared_mutex mutex;
  std::deque<BasisEntry> entries;
  std::map<GroupFingerprint, std::vector<BasisId>> buckets;
  std::map<std::pair<BasisId, BasisId>, BasisId> products;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::optional<BasisId> lookup(Registry& r, const FiniteGroup& g, const GroupFingerprint& print) {
  auto it = r.buckets.find(print);
  if (it == r.buckets.end()) return std::nullopt;
  for (BasisId id : it->second)
    if (is_isomorphic(r.entries[id].representative, g)) return id;
  return std::nullopt;
}

std::string display_name(const FiniteGroup& g) {
  std::string name = identify(g);
  return name.empty() ? group_spec(g) : name;
}

BasisId product_id(BasisId a, BasisId b) {
  if (b < a) std::swap(a, b);
  Registry& r = registry();
  {
    std::shared_lock lock(r.mutex);
    auto it = r.products.find({a, b});
    if (it != r.products.end()) return it->second;
  }
  const BasisId id = basis_id(direct_product(basis_representative(a), basis_representative(b)));
  std::unique_lock lock(r.mutex);
  r.products.emplace(std::make_pair(a, b), id);
  return id;
}

}  // namespace

BasisId basis_id(const FiniteGroup& g) {
  Registry& r = registry();
  const GroupFingerprint print = fingerprint(g);
  {
    std::shared_lock lock(r.mutex);
    if (auto id = lookup(r, g, print)) return *id;
  }
  std::string name = display_name(g);
  std::unique_lock lock(r.mutex);
  if (auto id = lookup(r, g, print)) return *id;
  const BasisId id = static_cast<BasisId>(r.entries.size());
  r.entries.push_back({g, print, std::move(name)});
  r.buckets[print].push_back(id);
  return id;
}

const FiniteGroup& basis_representative(BasisId id) {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  return r.entries.at(id).representative;
}

const std::string& basis_name(BasisId id) {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  return r.entries.at(id).name;
}

std::size_t registered_basis_size() {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  return r.entries.size();
}

BurnsideClass BurnsideClass::unit() { return of(FiniteGroup()); }

BurnsideClass BurnsideClass::of(const FiniteGroup& g, const Integer& coefficient) {
  BurnsideClass x;
  x.add_term(basis_id(g), coefficient);
  return x;
}

Integer BurnsideClass::coefficient(BasisId id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<BasisId, Integer>> BurnsideClass::sorted_terms() const {
  std::vector<std::pair<BasisId, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const std::size_t oa = basis_representative(a.first).order();
    const std::size_t ob = basis_representative(b.first).order();
    if (oa != ob) return oa < ob;
    return basis_name(a.first) < basis_name(b.first);
  });
  return out;
}

void BurnsideClass::add_term(BasisId id, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(id, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

BurnsideClass& BurnsideClass::operator+=(const BurnsideClass& other) {
  for (const auto& [id, c] : other.terms_) add_term(id, c);
  return *this;
}

BurnsideClass& BurnsideClass::operator-=(const BurnsideClass& other) {
  for (const auto& [id, c] : other.terms_) add_term(id, -c);
  return *this;
}

BurnsideClass& BurnsideClass::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, c] : terms_) c *= scalar;
  return *this;
}

BurnsideClass multiply(const BurnsideClass& x, const BurnsideClass& y) {
  BurnsideClass out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_term(product_id(a, b), ca * cb);
  return out;
}

Rational chi_orb(const BurnsideClass& x) {
  Rational sum = 0;
  for (const auto& [id, c] : x.terms())
    sum += ratio(c, Integer(static_cast<unsigned long>(basis_representative(id).order())));
  return sum;
}

Integer chi_q(const BurnsideClass& x) {
  Integer sum = 0;
  for (const auto& [id, c] : x.terms()) sum += c;
  return sum;
}

Integer chi_kn(const BurnsideClass& x, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  require_prime(p);
  Integer sum = 0;
  for (const auto& [id, c] : x.terms()) sum += c * chi_kn_finite(basis_representative(id), p, n, options);
  return sum;
}

Integer phi_k(const BurnsideClass& x, const FiniteGroup& k) {
  Integer sum = 0;
  for (const auto& [id, c] : x.terms())
    sum += c * Integer(static_cast<unsigned long>(monomorphism_classes(k, basis_representative(id))));
  return sum;
}

BurnsideClass loop(const BurnsideClass& x) {
  BurnsideClass out;
  for (const auto& [id, c] : x.terms()) {
    const FiniteGroup& g = basis_representative(id);
    for (ElementId rep : g.conjugacy_classes().representatives) {
      const ElementId one[] = {rep};
      out.add_term(basis_id(centralizer(g, std::span<const ElementId>(one))), c);
    }
  }
  return out;
}

BurnsideClass p_shift(const BurnsideClass& x, std::uint64_t p, std::size_t n, const CensusOptions& options) {
  require_prime(p);
  BurnsideClass out;
  for (const auto& [id, c] : x.terms()) {
    const TupleCensus census = census_naive(basis_representative(id), p, n, options);
    for (const FiniteGroup& c_tuple : census.centralizers) out.add_term(basis_id(c_tuple), c);
  }
  return out;
}

std::string to_string(const BurnsideClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, c] : x.sorted_terms()) {
    const bool negative = c < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const Integer magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += basis_name(id);
    first = false;
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BurnsideClass parse_term(const std::string& raw, const std::string& text) {
  const std::string term = trim(raw);
  if (term.empty()) throw ParseError("empty term in '" + text + "'");
  if (all_digits(term)) return BurnsideClass::unit() * Integer(term);
  Integer k = 1;
  std::string spec = term;
  if (auto star = term.find('*'); star != std::string::npos) {
    const std::string count = trim(term.substr(0, star));
    if (!all_digits(count)) throw ParseError("bad coefficient '" + count + "' in '" + text + "'");
    k = Integer(count);
    spec = trim(term.substr(star + 1));
  }
  if (spec.empty() || spec.find('*') != std::string::npos)
    throw ParseError("bad term '" + term + "' in '" + text + "'");
  return BurnsideClass::of(standard_group(spec), k);
}

}  // namespace

BurnsideClass parse_burnside_expression(const std::string& text) {
  BurnsideClass out;
  std::string current;
  int sign = 1;
  int depth = 0;
  bool leading = true;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (leading && trim(current).empty()) {
        if (c == '-') sign = -sign;
        leading = false;
        continue;
      }
      out += parse_term(current, text) * Integer(sign);
      current.clear();
      sign = c == '-' ? -1 : 1;
      leading = false;
      continue;
    }
    current += c;
    if (!std::isspace(static_cast<unsigned char>(c))) leading = false;
  }
  if (depth != 0) throw ParseError("unbalanced parenthesis in '" + text + "'");
  out += parse_term(current, text) * Integer(sign);
  return out;
}

nlohmann::json to_json(const BurnsideClass& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [id, c] : x.sorted_terms()) {
    nlohmann::json coefficient;
    if (c.fits_slong_p()) coefficient = c.get_si();
    else coefficient = c.get_str();
    terms.push_back({{"group", basis_name(id)}, {"coefficient", coefficient}});
  }
  return terms;
}

BurnsideClass burnside_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("Burnside class JSON must be an array");
  BurnsideClass out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("group") || !term.contains("coefficient"))
      throw ParseError("each term needs 'group' and 'coefficient'");
    const auto& c = term.at("coefficient");
    Integer k;
    if (c.is_number_integer()) k = Integer(c.get<long>());
    else if (c.is_string()) {
      try {
        k = Integer(c.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
      }
    } else {
      throw ParseError("coefficient must be an integer");
    }
    out += BurnsideClass::of(standard_group(term.at("group").get<std::string>()), k);
  }
  return out;
}

}  // namespace chromatic
