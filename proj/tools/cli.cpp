#include "cli.hpp"

#include <functional>
#include <optional>
#include <regex>
#include <set>

#include "CLI11.hpp"

#include "chromatic/acceptance.hpp"
#include "chromatic/burnside.hpp"
#include "chromatic/cells.hpp"
#include "chromatic/census.hpp"
#include "chromatic/closed_forms.hpp"
#include "chromatic/coxeter.hpp"
#include "chromatic/error.hpp"
#include "chromatic/report.hpp"

namespace chromatic::cli {

HeightRange parse_range(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d{1,6})\s*(?:\.\.\s*(-?\d{1,6})\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("bad height range '" + text + "' (expected a or a..b)");
  HeightRange r;
  r.first = std::stol(m[1].str());
  r.last = m[2].matched ? std::stol(m[2].str()) : r.first;
  if (r.first < -1) throw UsageError("heights start at -1");
  if (r.last < r.first) throw UsageError("empty height range '" + text + "'");
  if (r.last > 1000) throw UsageError("height range '" + text + "' is too large");
  return r;
}

std::string render_text(const Document& d) {
  std::string out;
  for (const auto& [key, value] : d.summary) out += key + ": " + value + "\n";
  if (!d.table.columns.empty() && !d.table.rows.empty()) {
    if (!d.summary.empty()) out += "\n";
    out += cli::render_text(d.table);
  }
  for (const auto& note : d.notes) out += "note: " + note + "\n";
  return out;
}

nlohmann::json to_json(const Document& d) {
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [key, value] : d.summary) summary[key] = value;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : d.table.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) r[d.table.columns[c]] = row[c];
    rows.push_back(r);
  }
  return {{"command", d.command}, {"summary", summary}, {"columns", d.table.columns}, {"rows", rows}, {"notes", d.notes}};
}

namespace {

enum class Format { Text, Json, Csv };

struct Globals {
  bool json = false;
  bool csv = false;
  unsigned threads = 1;
  std::size_t tuple_cap = kDefaultTupleCap;
  std::size_t max_order = kDefaultMaxOrder;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
  CensusOptions census() const { return {tuple_cap, threads}; }
};

void emit(std::ostream& out, const Document& d, Format f) {
  switch (f) {
    case Format::Text: out << render_text(d); break;
    case Format::Json: out << to_json(d).dump(2) << "\n"; break;
    case Format::Csv: out << render_csv(d.table); break;
  }
}

std::string str(std::size_t v) { return std::to_string(v); }

std::string tuple_string(const FiniteGroup& g, const std::vector<ElementId>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += g.element(t[i]).to_cycle_string();
  }
  return t.empty() ? "()" : out;
}

std::string group_label(const FiniteGroup& g) { return basis_name(basis_id(g)); }

// One evaluator per target kind. `orbifold` is empty when there is no height -1 value.
struct ChiSource {
  std::string kind;
  std::string target;
  std::uint64_t prime = 2;
  std::optional<std::function<Rational()>> orbifold;
  std::function<Rational()> rational;
  std::function<Rational(std::size_t)> chromatic;
};

Graph read_graph(const std::string& ref) {
  static const std::regex named(R"(^(cycle|complete|empty):(\d{1,3})$)");
  std::smatch m;
  if (std::regex_match(ref, m, named)) {
    const std::size_t s = std::stoul(m[2].str());
    if (m[1] == "cycle") {
      if (s < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
      return Graph::cycle(s);
    }
    if (m[1] == "complete") return Graph::complete(s);
    return Graph(s);
  }
  return load_graph(ref);
}

ChiSource chi_source(const std::string& kind, const std::string& target, std::optional<std::uint64_t> p,
                     const Globals& g) {
  ChiSource s;
  s.kind = kind;
  s.target = target;
  s.prime = p.value_or(2);
  const CensusOptions opts = g.census();
  const std::uint64_t prime = s.prime;
  if (kind == "group" || kind == "finite" || kind == "burnside") {
    const BurnsideClass x =
        kind == "burnside" ? parse_burnside_expression(target) : class_of(standard_group(target));
    require_prime(prime);
    s.orbifold = [x] { return chi_orb(x); };
    s.rational = [x] { return Rational(chi_q(x)); };
    s.chromatic = [x, prime, opts](std::size_t n) { return Rational(chi_kn(x, prime, n, opts)); };
  } else if (kind == "cells") {
    const ProperCellStructure c = load_cell_structure(target);
    require_prime(prime);
    s.orbifold = [c] { return chi_orb_cells(c); };
    s.rational = [c] { return Rational(chi_q_cells(c)); };
    s.chromatic = [c, prime, opts](std::size_t n) { return Rational(chi_kn_cells(c, prime, n, opts)); };
  } else if (kind == "coxeter") {
    if (prime != 2) throw InvalidArgument("right-angled Coxeter groups are evaluated at p = 2 only");
    const SphericalProfile profile = clique_census(read_graph(target));
    s.orbifold = [profile] { return chi_orb_coxeter(profile); };
    s.rational = [profile] { return Rational(chi_kn_coxeter(profile, 0)); };
    s.chromatic = [profile](std::size_t n) { return Rational(chi_kn_coxeter(profile, n)); };
  } else if (kind == "closed-form") {
    const ClosedFormTarget t = closed_form_target(target);
    if (p && *p != t.prime)
      throw InvalidArgument("closed form '" + target + "' is stated at p = " + std::to_string(t.prime));
    s.prime = t.prime;
    if (closed_form_has_orbifold_row(t)) s.orbifold = [t] { return evaluate_closed_form(t, -1); };
    s.rational = [t] { return closed_form_chi_q(t); };
    s.chromatic = [t](std::size_t n) { return evaluate_closed_form(t, static_cast<long>(n)); };
  } else {
    throw UsageError("unknown target kind '" + kind + "' (group, burnside, cells, coxeter, closed-form)");
  }
  return s;
}

Table chi_rows(const ChiSource& s, const HeightRange& range) {
  Table t{{"height", "invariant", "value"}, {}};
  if (range.first == -1 && !s.orbifold)
    throw HeightUndefined("'" + s.target + "' has no orbifold (height -1) value");
  if (range.first <= 0 && s.orbifold) t.add({"-1", "chi_orb", to_string((*s.orbifold)())});
  for (long n = std::max(range.first, 0L); n <= range.last; ++n) {
    if (n == 0) t.add({"0", "chi_Q", to_string(s.rational())});
    else t.add({std::to_string(n), "chi_K(" + std::to_string(n) + ")", to_string(s.chromatic(static_cast<std::size_t>(n)))});
  }
  return t;
}

void add_chromatic_summary(Document& d, const std::function<Rational(std::size_t)>& chromatic,
                           const std::optional<std::string>& range_text) {
  if (!range_text) return;
  const HeightRange r = parse_range(*range_text);
  for (long n = std::max(r.first, 1L); n <= r.last; ++n)
    d.summary.emplace_back("chi_K(" + std::to_string(n) + ")", to_string(chromatic(static_cast<std::size_t>(n))));
}

std::uint64_t prime_or_default(const std::optional<std::uint64_t>& p) {
  const std::uint64_t prime = p.value_or(2);
  require_prime(prime);
  return prime;
}

Document census_document(const std::string& spec, std::uint64_t p, std::size_t n, bool reps, bool extended,
                         const Globals& g) {
  require_prime(p);
  const FiniteGroup group = standard_group(spec);
  Document d;
  d.command = "census";
  d.summary = {{"group", spec}, {"order", str(group.order())}, {"prime", std::to_string(p)}, {"arity", str(n)}};
  if (extended) d.summary.emplace_back("extended", "true");
  d.table.columns = {"orbit", "size", "centralizer_order", "centralizer"};
  if (reps) d.table.columns.push_back("representative");
  try {
    const TupleCensus c = extended ? census_extended(group, p, n, g.census()) : census_naive(group, p, n, g.census());
    d.summary.emplace_back("tuples", str(c.tuple_count));
    d.summary.emplace_back("orbits", str(c.orbit_count()));
    for (std::size_t i = 0; i < c.orbit_count(); ++i) {
      std::vector<std::string> row{str(i + 1), str(c.orbit_sizes[i]), str(c.centralizers[i].order()),
                                   group_label(c.centralizers[i])};
      if (reps) row.push_back(tuple_string(group, c.orbit_reps[i]));
      d.table.add(std::move(row));
    }
  } catch (const CensusTooLarge& e) {
    if (reps || extended) throw;
    d.summary.emplace_back("orbits", to_string(census_recursive(group, p, n, g.census())));
    d.notes.push_back(std::string("orbit table omitted: ") + e.what());
  }
  return d;
}

Document chi_document(const std::string& kind, const std::string& target, std::optional<std::uint64_t> p,
                      const std::string& range_text, const Globals& g) {
  const HeightRange range = parse_range(range_text);
  const ChiSource s = chi_source(kind, target, p, g);
  Document d;
  d.command = "chi";
  d.summary = {{"target", target}, {"kind", kind}, {"prime", std::to_string(s.prime)}};
  d.table = chi_rows(s, range);
  return d;
}

Document burnside_document(const std::string& expr, const std::optional<std::string>& times,
                           const std::optional<std::size_t>& shift, bool apply_loop, std::optional<std::uint64_t> p,
                           const std::optional<std::string>& range, const Globals& g) {
  BurnsideClass x = parse_burnside_expression(expr);
  if (times) x = multiply(x, parse_burnside_expression(*times));
  const std::uint64_t prime = prime_or_default(p);
  if (shift) x = p_shift(x, prime, *shift, g.census());
  if (apply_loop) x = loop(x);
  Document d;
  d.command = "burnside";
  d.summary = {{"class", to_string(x)}, {"chi_orb", to_string(chi_orb(x))}, {"chi_Q", to_string(chi_q(x))}};
  if (range) d.summary.emplace_back("prime", std::to_string(prime));
  add_chromatic_summary(d, [&](std::size_t n) { return Rational(chi_kn(x, prime, n, g.census())); }, range);
  d.table.columns = {"group", "order", "coefficient"};
  for (const auto& [id, c] : x.sorted_terms())
    d.table.add({basis_name(id), str(basis_representative(id).order()), to_string(c)});
  return d;
}

Document coxeter_document(const std::string& ref, const std::optional<std::string>& range) {
  const Graph l = read_graph(ref);
  const SphericalProfile s = clique_census(l);
  Document d;
  d.command = "coxeter";
  d.summary = {{"graph", ref},
               {"vertices", str(l.vertex_count())},
               {"edges", str(l.edge_count())},
               {"clique_number", str(s.clique_number())},
               {"chi_orb", to_string(chi_orb_coxeter(s))}};
  add_chromatic_summary(d, [&](std::size_t n) { return Rational(chi_kn_coxeter(s, n)); }, range);
  d.table.columns = {"size", "spherical_subsets"};
  for (std::size_t k = 0; k < s.counts.size(); ++k)
    if (s.counts[k] != 0) d.table.add({str(k), to_string(s.counts[k])});
  return d;
}

Document cells_document(const std::string& ref, std::optional<std::uint64_t> p, const std::optional<std::string>& range,
                        const Globals& g) {
  const ProperCellStructure c = load_cell_structure(ref);
  Document d;
  d.command = "cells";
  d.summary = {{"label", c.label},
               {"orbit_cells", str(c.orbit_cell_count())},
               {"dimension", str(c.dimension())},
               {"burnside_class", to_string(to_burnside_class(c))},
               {"chi_orb", to_string(chi_orb_cells(c))},
               {"chi_Q", to_string(chi_q_cells(c))}};
  const std::uint64_t prime = prime_or_default(p);
  if (range) d.summary.emplace_back("prime", std::to_string(prime));
  add_chromatic_summary(d, [&](std::size_t n) { return Rational(chi_kn_cells(c, prime, n, g.census())); }, range);
  d.table.columns = {"dim", "stabilizer", "order", "multiplicity"};
  for (const Cell& cell : c.cells)
    d.table.add({str(cell.dim), group_label(cell.stabilizer), str(cell.stabilizer.order()), str(cell.multiplicity)});
  return d;
}

Document closed_form_document(const std::optional<std::string>& name) {
  Document d;
  d.command = "closed-form";
  if (!name) {
    d.table.columns = {"name", "kind", "prime", "chi_Q", "orbifold_row", "cohomology_known", "description"};
    for (const auto& n : closed_form_names()) {
      const ClosedFormTarget t = closed_form_target(n);
      d.table.add({n, t.kind, std::to_string(t.prime), to_string(closed_form_chi_q(t)),
                   closed_form_has_orbifold_row(t) ? "yes" : "no", t.cohomology_known ? "yes" : "no", t.description});
    }
    return d;
  }
  const ClosedFormTarget t = closed_form_target(*name);
  d.summary = {{"name", t.name},
               {"kind", t.kind},
               {"prime", std::to_string(t.prime)},
               {"description", t.description},
               {"provenance", t.provenance},
               {"chi_Q", to_string(closed_form_chi_q(t))},
               {"cohomology_known", t.cohomology_known ? "yes" : "no"}};
  d.table.columns = {"parameter", "value"};
  static const std::set<std::string> shown_elsewhere{"kind", "prime", "description", "provenance", "cohomology_known"};
  for (const auto& [key, value] : t.parameters.items())
    if (!shown_elsewhere.count(key)) d.table.add({key, value.is_string() ? value.get<std::string>() : value.dump()});
  return d;
}

Document report_document(const std::string& kind, const std::string& target, std::optional<std::uint64_t> p,
                         std::size_t n, const Globals& g) {
  CharacterReport r;
  if (kind == "group" || kind == "finite") {
    r = character_report(standard_group(target), prime_or_default(p), n, g.census());
    r.target = target;
  } else if (kind == "coxeter") {
    if (p && *p != 2) throw InvalidArgument("right-angled Coxeter groups are evaluated at p = 2 only");
    r = character_report(read_graph(target), n, target);
  } else if (kind == "closed-form") {
    const ClosedFormTarget t = closed_form_target(target);
    if (p && *p != t.prime)
      throw InvalidArgument("closed form '" + target + "' is stated at p = " + std::to_string(t.prime));
    r = character_report(t, n);
  } else {
    throw UsageError("unknown report kind '" + kind + "' (group, coxeter, closed-form)");
  }
  Document d;
  d.command = "report";
  d.summary = {{"target", r.target},
               {"prime", std::to_string(r.prime)},
               {"height", str(r.height)},
               {"summands", to_string(r.summand_count)},
               {"chi_K(" + str(r.height) + ")", to_string(r.chi_kn)}};
  d.table.columns = {"centralizer", "count", "even_rank", "odd_rank", "euler"};
  auto rank = [](const std::optional<Integer>& v) { return v ? to_string(*v) : std::string("unknown"); };
  for (const auto& s : r.summands)
    d.table.add({s.centralizer, to_string(s.count), rank(s.even_rank), rank(s.odd_rank), to_string(s.euler)});
  d.notes = r.notes;
  return d;
}

int verify_command(const std::vector<std::string>& filter, const std::optional<std::string>& soule_file,
                   const Globals& g, std::ostream& out) {
  acceptance::Options options;
  options.filter = filter;
  options.threads = g.threads;
  if (soule_file) options.soule = load_cell_structure(*soule_file);
  const auto results = acceptance::run(options);
  if (g.format() == Format::Text) {
    acceptance::print(out, results);
  } else {
    Document d;
    d.command = "verify";
    std::size_t passed = 0;
    d.table.columns = {"criterion", "key", "status", "checks", "title"};
    for (const auto& r : results) {
      passed += r.passed();
      d.table.add({std::to_string(r.criterion.number), r.criterion.key, r.passed() ? "PASS" : "FAIL", str(r.checks),
                   r.criterion.title});
      for (const auto& f : r.failures) d.notes.push_back("[" + std::to_string(r.criterion.number) + "] " + f);
    }
    d.summary = {{"passed", str(passed)}, {"failed", str(results.size() - passed)}};
    emit(out, d, g.format());
  }
  return acceptance::all_passed(results) ? kExitOk : kExitVerify;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chromatic Euler characteristics of classifying spaces", "chromatic"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  auto* json = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output of the table")->excludes(json);
  app.add_option("--threads", g.threads, "worker threads for tuple counting")->check(CLI::Range(1u, 256u));
  app.add_option("--tuple-cap", g.tuple_cap, "largest tuple set the naive census may enumerate");
  app.add_option("--max-order", g.max_order, "largest group order any construction may reach");

  std::optional<std::uint64_t> p;
  std::string range = "0..3";
  std::optional<std::string> opt_range;
  std::string spec, kind, target;
  std::size_t arity = 1;
  bool reps = false, extended = false, apply_loop = false, export_json = false;
  std::optional<std::string> times, soule_file, name;
  std::optional<std::size_t> shift;
  std::vector<std::string> filter;

  auto* census = app.add_subcommand("census", "orbits of commuting p-power tuples");
  census->add_option("group", spec, "group spec, e.g. S4, D8, C2xC2, perm:(0 1),(1 2)")->required();
  census->add_option("--p", p, "prime");
  census->add_option("--n", arity, "tuple length");
  census->add_flag("--reps", reps, "list orbit representatives");
  census->add_flag("--extended", extended, "first entry of each tuple unrestricted");

  auto* chi = app.add_subcommand("chi", "chromatic sequence: chi_orb at -1, chi_Q at 0, chi_K(n) above");
  chi->add_option("kind", kind, "group, burnside, cells, coxeter or closed-form")->required();
  chi->add_option("target", target, "group spec, expression, cell structure, graph or closed-form name")->required();
  chi->add_option("--p", p, "prime (default 2; fixed by closed forms)");
  chi->add_option("--n", range, "heights, a..b (a >= -1); starting at 0 adds the -1 row when defined");

  auto* burnside = app.add_subcommand("burnside", "class arithmetic: product, then p-shift, then loop");
  burnside->add_option("expression", spec, "e.g. \"D8 + D8 - C4\"")->required();
  burnside->add_option("--times", times, "multiply by a second expression");
  burnside->add_option("--shift", shift, "apply the p-shift at this height (prime from --p)");
  burnside->add_flag("--loop", apply_loop, "apply the loop operator");
  burnside->add_option("--p", p, "prime (default 2)");
  burnside->add_option("--n", opt_range, "also report chi_K(n) for these heights");

  auto* coxeter = app.add_subcommand("coxeter", "spherical profile of a right-angled Coxeter group");
  coxeter->add_option("graph", target, "edge-list or JSON file, or cycle:N, complete:N, empty:N")->required();
  coxeter->add_option("--n", opt_range, "also report chi_K(n) for these heights");

  auto* cells = app.add_subcommand("cells", "equivariant cell structures");
  cells->add_option("structure", target, "built-in name or JSON file")->required();
  cells->add_option("--p", p, "prime (default 2)");
  cells->add_option("--n", opt_range, "also report chi_K(n) for these heights");
  cells->add_flag("--export", export_json, "print the structure as a loadable JSON file");

  auto* closed = app.add_subcommand("closed-form", "bundled closed-form targets");
  closed->add_option("name", name, "target name; lists all targets when omitted");

  auto* report = app.add_subcommand("report", "character decomposition summands at one height");
  report->add_option("kind", kind, "group, coxeter or closed-form")->required();
  report->add_option("target", target, "group spec, graph or closed-form name")->required();
  report->add_option("--p", p, "prime (default 2; fixed by closed forms)");
  report->add_option("--n", arity, "height");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--filter", filter, "criterion keys or numbers")->delimiter(',');
  verify->add_option("--soule", soule_file, "cell structure JSON replacing the built-in SL3(Z) complex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    set_max_order(g.max_order);
    const Format f = g.format();
    if (census->parsed()) {
      emit(out, census_document(spec, prime_or_default(p), arity, reps, extended, g), f);
    } else if (chi->parsed()) {
      emit(out, chi_document(kind, target, p, range, g), f);
    } else if (burnside->parsed()) {
      emit(out, burnside_document(spec, times, shift, apply_loop, p, opt_range, g), f);
    } else if (coxeter->parsed()) {
      emit(out, coxeter_document(target, opt_range), f);
    } else if (cells->parsed()) {
      if (export_json) out << to_json(load_cell_structure(target)).dump(2) << "\n";
      else emit(out, cells_document(target, p, opt_range, g), f);
    } else if (closed->parsed()) {
      emit(out, closed_form_document(name), f);
    } else if (report->parsed()) {
      emit(out, report_document(kind, target, p, arity, g), f);
    } else if (verify->parsed()) {
      return verify_command(filter, soule_file, g, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace chromatic::cli
