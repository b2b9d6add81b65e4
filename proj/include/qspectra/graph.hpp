#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qspectra {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v once stored in a Graph

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Raised for out-of-range endpoints and loops; carries the offending pair.
class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, VertexPair pair)
      : std::invalid_argument(what), pair_(pair) {}
  VertexPair pair() const { return pair_; }

 private:
  VertexPair pair_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The edge set is stored sorted (u < v, lexicographic) so iteration and
/// every derived report is deterministic. Isolated vertices are allowed.
class Graph {
 public:
  /// Builds a graph; duplicate pairs (in either orientation) collapse.
  /// Throws GraphError on a loop or an endpoint >= n, std::invalid_argument on n == 0.
  static Graph from_edges(std::size_t n, std::span<const VertexPair> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> offsets_;  // CSR row starts, size n+1
  std::vector<Vertex> adjacency_;     // sorted neighbor lists
};

inline Graph graph_from_edges(std::size_t n, std::span<const VertexPair> edges) {
  return Graph::from_edges(n, edges);
}
inline Graph graph_from_edges(std::size_t n, std::initializer_list<VertexPair> edges) {
  return Graph::from_edges(n, std::span<const VertexPair>(edges.begin(), edges.size()));
}

struct DegreeStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::int64_t zagreb_m1 = 0;  // sum of squared degrees

  // Average degree as the exact pair (2m, n).
  std::int64_t average_numerator() const { return 2 * static_cast<std::int64_t>(m); }
  std::int64_t average_denominator() const { return static_cast<std::int64_t>(n); }
  double average_degree() const {
    return n == 0 ? 0.0 : 2.0 * static_cast<double>(m) / static_cast<double>(n);
  }
};

DegreeStats degree_stats(const Graph& g);

struct Structure {
  std::vector<std::vector<Vertex>> components;  // each sorted; ordered by smallest vertex
  std::vector<bool> component_bipartite;
  bool connected = false;
  bool regular = false;
  std::optional<std::size_t> regularity_degree;

  std::size_t component_count() const { return components.size(); }
  std::size_t bipartite_component_count() const;
  bool bipartite() const;
};

Structure structure(const Graph& g);

// --- named families -------------------------------------------------------

/// Parameterised description of one of the named graph families.
struct FamilySpec {
  enum class Kind {
    Complete,           // K_n
    CompleteBipartite,  // K_{a,b}
    Star,               // K_{1,n-1} on n vertices
    Cycle,              // C_n, n >= 3
    Path,               // P_n
    Matching,           // k disjoint edges
    CrownLike,          // K_{r+1,r+1} minus a perfect matching
    Prism,              // C_n x P_2, n >= 3
    DisjointCopies,     // g copies of an inner family
  };

  Kind kind = Kind::Complete;
  std::size_t first = 0;   // n, a, k, r, or copy count depending on kind
  std::size_t second = 0;  // b for CompleteBipartite
  std::vector<FamilySpec> inner;  // exactly one element for DisjointCopies

  static FamilySpec complete(std::size_t n) { return {Kind::Complete, n, 0, {}}; }
  static FamilySpec complete_bipartite(std::size_t a, std::size_t b) {
    return {Kind::CompleteBipartite, a, b, {}};
  }
  static FamilySpec star(std::size_t n) { return {Kind::Star, n, 0, {}}; }
  static FamilySpec cycle(std::size_t n) { return {Kind::Cycle, n, 0, {}}; }
  static FamilySpec path(std::size_t n) { return {Kind::Path, n, 0, {}}; }
  static FamilySpec matching(std::size_t k) { return {Kind::Matching, k, 0, {}}; }
  static FamilySpec crown(std::size_t r) { return {Kind::CrownLike, r, 0, {}}; }
  static FamilySpec prism(std::size_t n) { return {Kind::Prism, n, 0, {}}; }
  static FamilySpec copies(std::size_t g, FamilySpec inner_spec) {
    return {Kind::DisjointCopies, g, 0, {std::move(inner_spec)}};
  }

  std::string describe() const;
};

/// Throws std::invalid_argument when a parameter is below the kind's minimum.
Graph build_family(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

/// Vertex (u, v) of the product maps to u * |H| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Relabels h after g.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph disjoint_union(std::span<const Graph> parts);

// --- text formats ---------------------------------------------------------

/// Parse failure with 1-based line and column of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One graph6 line (without the trailing newline). Supports the long
/// order header for n >= 63. `line_number` only feeds error reports.
Graph parse_graph6(std::string_view text, std::size_t line_number = 1);
std::string to_graph6(const Graph& g);

/// "n" on the first data line, then one "u v" pair per line; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Every graph in `text`: one per non-empty graph6 line, or a single edge list.
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format = GraphFormat::Auto);

}  // namespace qspectra
