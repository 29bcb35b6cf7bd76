#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "json.hpp"

#include "chromatic/numeric.hpp"

namespace chromatic {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count = 0);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Throws InvalidArgument on loops or out-of-range vertices; duplicates are ignored.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  const boost::dynamic_bitset<>& neighbours(std::size_t v) const { return adjacency_[v]; }
  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  static Graph complete(std::size_t s);
  static Graph cycle(std::size_t s);

 private:
  std::vector<boost::dynamic_bitset<>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// s(l) = number of cliques of size l (the empty clique included), l = 0..|S|.
struct SphericalProfile {
  std::vector<Integer> counts;

  Integer at(std::size_t l) const { return l < counts.size() ? counts[l] : Integer(0); }
  std::size_t clique_number() const;
};

/// Pivoting Bron-Kerbosch recursion that counts cliques of every size without
/// listing them.
SphericalProfile clique_census(const Graph& l);

/// sum_l s(l) (2^n - 1)^l
Integer chi_kn_coxeter(const Graph& l, std::size_t n);
Integer chi_kn_coxeter(const SphericalProfile& s, std::size_t n);
/// sum_l s(l) (-1/2)^l
Rational chi_orb_coxeter(const Graph& l);
Rational chi_orb_coxeter(const SphericalProfile& s);

/// Lines `u v` add an edge, a line with a single `u` declares a vertex, `#`
/// starts a comment. The vertex count is one more than the largest index.
/// Throws ParseError.
Graph parse_edge_list(const std::string& text);
/// {"vertices": n, "adjacency": [[...], ...]} (neighbour lists) or a 0/1 matrix.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Graph& g);
/// .json files go through graph_from_json, everything else through parse_edge_list.
Graph load_graph(const std::string& path);

}  // namespace chromatic
