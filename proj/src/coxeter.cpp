#include "chromatic/coxeter.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "chromatic/error.hpp"

namespace chromatic {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count, boost::dynamic_bitset<>(vertex_count)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (adjacency_[u][v]) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edge_count_;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return u < vertex_count() && v < vertex_count() && adjacency_[u][v];
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (auto v = adjacency_[u].find_next(u); v != boost::dynamic_bitset<>::npos; v = adjacency_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::complete(std::size_t s) {
  Graph g(s);
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = u + 1; v < s; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t s) {
  Graph g(s);
  if (s >= 3)
    for (std::size_t u = 0; u < s; ++u) g.add_edge(u, (u + 1) % s);
  else if (s == 2)
    g.add_edge(0, 1);
  return g;
}

std::size_t SphericalProfile::clique_number() const {
  std::size_t omega = 0;
  for (std::size_t l = 0; l < counts.size(); ++l)
    if (counts[l] != 0) omega = l;
  return omega;
}

namespace {

using Bits = boost::dynamic_bitset<>;
// (held, pivots) -> number of leaves of the recursion tree
using LeafTally = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

// Every clique inside `candidates` is counted once: it is the held set of
// exactly one leaf together with a subset of that leaf's pivots.
void count_cliques(const Graph& g, const Bits& candidates, std::size_t held, std::size_t pivots, LeafTally& tally) {
  if (candidates.none()) {
    ++tally[{held, pivots}];
    return;
  }
  std::size_t pivot = candidates.find_first();
  std::size_t best = 0;
  for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
    const std::size_t degree = (g.neighbours(v) & candidates).count();
    if (degree > best) {
      best = degree;
      pivot = v;
    }
  }
  count_cliques(g, candidates & g.neighbours(pivot), held, pivots + 1, tally);

  Bits remaining = candidates;
  remaining.reset(pivot);
  const Bits branch = remaining - g.neighbours(pivot);
  for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
    count_cliques(g, remaining & g.neighbours(v), held + 1, pivots, tally);
    remaining.reset(v);
  }
}

}  // namespace

SphericalProfile clique_census(const Graph& l) {
  const std::size_t n = l.vertex_count();
  LeafTally tally;
  Bits all(n);
  all.set();
  count_cliques(l, all, 0, 0, tally);

  SphericalProfile profile;
  profile.counts.assign(n + 1, Integer(0));
  for (const auto& [key, leaves] : tally) {
    const auto [held, pivots] = key;
    Integer multiplier(static_cast<unsigned long>(leaves));
    Integer binom;
    for (std::size_t i = 0; i <= pivots; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), pivots, i);
      profile.counts[held + i] += multiplier * binom;
    }
  }
  return profile;
}

Integer chi_kn_coxeter(const SphericalProfile& s, std::size_t n) {
  const Integer base = ipow(Integer(2), n) - 1;
  Integer sum = 0;
  Integer power = 1;
  for (const Integer& count : s.counts) {
    sum += count * power;
    power *= base;
  }
  return sum;
}

Integer chi_kn_coxeter(const Graph& l, std::size_t n) { return chi_kn_coxeter(clique_census(l), n); }

Rational chi_orb_coxeter(const SphericalProfile& s) {
  const Rational base(-1, 2);
  Rational sum = 0;
  Rational power = 1;
  for (const Integer& count : s.counts) {
    sum += Rational(count) * power;
    power *= base;
  }
  return sum;
}

Rational chi_orb_coxeter(const Graph& l) { return chi_orb_coxeter(clique_census(l)); }

namespace {

std::size_t parse_vertex(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    if (token.empty() || token[0] == '-' || token[0] == '+') throw std::invalid_argument("sign");
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty())
    throw ParseError("line " + std::to_string(line) + ": '" + token + "' is not a vertex index");
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t vertex_count = 0;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'u v' or 'u'");
    const std::size_t u = parse_vertex(tokens[0], line_no);
    vertex_count = std::max(vertex_count, u + 1);
    if (tokens.size() == 2) {
      const std::size_t v = parse_vertex(tokens[1], line_no);
      if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + tokens[0]);
      vertex_count = std::max(vertex_count, v + 1);
      edges.emplace_back(u, v);
    }
  }
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("graph JSON must be an object");
    if (j.contains("matrix")) {
      const auto& m = j.at("matrix");
      const std::size_t n = m.size();
      Graph g(n);
      for (std::size_t u = 0; u < n; ++u) {
        if (m[u].size() != n) throw ParseError("adjacency matrix is not square");
        for (std::size_t v = 0; v < n; ++v) {
          const int a = m[u][v].get<int>(), b = m[v][u].get<int>();
          if ((a != 0 && a != 1) || a != b || (u == v && a != 0))
            throw ParseError("adjacency matrix must be symmetric 0/1 with zero diagonal");
          if (a == 1 && u < v) g.add_edge(u, v);
        }
      }
      return g;
    }
    if (!j.contains("adjacency")) throw ParseError("graph JSON needs 'adjacency' or 'matrix'");
    const auto& lists = j.at("adjacency");
    std::size_t n = lists.size();
    if (j.contains("vertices")) {
      n = j.at("vertices").get<std::size_t>();
      if (lists.size() > n) throw ParseError("more adjacency lists than vertices");
    }
    Graph g(n);
    for (std::size_t u = 0; u < lists.size(); ++u)
      for (const auto& v : lists[u]) {
        const std::size_t w = v.get<std::size_t>();
        if (w >= n) throw ParseError("neighbour " + std::to_string(w) + " out of range");
        if (w == u) throw ParseError("loop at vertex " + std::to_string(u));
        g.add_edge(u, w);
      }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json lists = nlohmann::json::array();
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    nlohmann::json row = nlohmann::json::array();
    const auto& nb = g.neighbours(u);
    for (auto v = nb.find_first(); v != boost::dynamic_bitset<>::npos; v = nb.find_next(v)) row.push_back(v);
    lists.push_back(row);
  }
  return {{"vertices", g.vertex_count()}, {"adjacency", lists}};
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("cannot parse " + path + ": " + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(buffer.str());
}

}  // namespace chromatic
