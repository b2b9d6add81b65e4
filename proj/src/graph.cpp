#include "qspectra/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace qspectra {

Graph Graph::from_edges(std::size_t n, std::span<const VertexPair> edges) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") has an endpoint out of range for n=" + std::to_string(n),
                       {a, b});
    }
    if (a == b) {
      throw GraphError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")",
                       {a, b});
    }
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.degrees_.assign(n, 0);
  for (const auto& e : g.edges_) {
    ++g.degrees_[e.u];
    ++g.degrees_[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted, so each neighbor list comes out sorted as well.
  for (const auto& e : g.edges_) g.adjacency_[fill[e.u]++] = e.v;
  for (const auto& e : g.edges_) g.adjacency_[fill[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.n = g.order();
  s.m = g.size();
  const auto& d = g.degrees();
  s.max_degree = *std::max_element(d.begin(), d.end());
  s.min_degree = *std::min_element(d.begin(), d.end());
  for (auto x : d) s.zagreb_m1 += static_cast<std::int64_t>(x) * static_cast<std::int64_t>(x);
  return s;
}

std::size_t Structure::bipartite_component_count() const {
  return static_cast<std::size_t>(
      std::count(component_bipartite.begin(), component_bipartite.end(), true));
}

bool Structure::bipartite() const {
  return std::all_of(component_bipartite.begin(), component_bipartite.end(),
                     [](bool b) { return b; });
}

Structure structure(const Graph& g) {
  Structure s;
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    std::vector<Vertex> comp;
    bool bipartite = true;
    std::queue<Vertex> frontier;
    colour[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          frontier.push(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    s.components.push_back(std::move(comp));
    s.component_bipartite.push_back(bipartite);
  }
  s.connected = s.components.size() == 1;
  const auto& d = g.degrees();
  s.regular = std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
  if (s.regular) s.regularity_degree = d.front();
  return s;
}

// --- families ---------------------------------------------------------------

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Graph from_pairs(std::size_t n, const std::vector<VertexPair>& pairs) {
  return Graph::from_edges(n, pairs);
}

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

std::string FamilySpec::describe() const {
  switch (kind) {
    case Kind::Complete: return "K_" + std::to_string(first);
    case Kind::CompleteBipartite:
      return "K_{" + std::to_string(first) + "," + std::to_string(second) + "}";
    case Kind::Star: return "star(" + std::to_string(first) + ")";
    case Kind::Cycle: return "C_" + std::to_string(first);
    case Kind::Path: return "P_" + std::to_string(first);
    case Kind::Matching: return std::to_string(first) + "K_2";
    case Kind::CrownLike:
      return "K_{" + std::to_string(first + 1) + "," + std::to_string(first + 1) + "}-F";
    case Kind::Prism: return "C_" + std::to_string(first) + "xP_2";
    case Kind::DisjointCopies:
      return std::to_string(first) + "(" + (inner.empty() ? "?" : inner.front().describe()) + ")";
  }
  return "?";
}

Graph complete_graph(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(vx(i), vx(j));
  return from_pairs(n, pairs);
}

Graph empty_graph(std::size_t n) { return from_pairs(n, {}); }

Graph build_family(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  const std::size_t p = spec.first;
  std::vector<VertexPair> pairs;
  switch (spec.kind) {
    case Kind::Complete:
      require(p >= 1, "complete graph needs n >= 1");
      return complete_graph(p);
    case Kind::CompleteBipartite: {
      const std::size_t q = spec.second;
      require(p >= 1 && q >= 1, "complete bipartite graph needs a, b >= 1");
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) pairs.emplace_back(vx(i), vx(p + j));
      return from_pairs(p + q, pairs);
    }
    case Kind::Star:
      require(p >= 1, "star needs n >= 1");
      for (std::size_t i = 1; i < p; ++i) pairs.emplace_back(0, vx(i));
      return from_pairs(p, pairs);
    case Kind::Cycle:
      require(p >= 3, "cycle needs n >= 3");
      for (std::size_t i = 0; i < p; ++i) pairs.emplace_back(vx(i), vx((i + 1) % p));
      return from_pairs(p, pairs);
    case Kind::Path:
      require(p >= 1, "path needs n >= 1");
      for (std::size_t i = 0; i + 1 < p; ++i) pairs.emplace_back(vx(i), vx(i + 1));
      return from_pairs(p, pairs);
    case Kind::Matching:
      require(p >= 1, "matching needs k >= 1");
      for (std::size_t i = 0; i < p; ++i) pairs.emplace_back(vx(2 * i), vx(2 * i + 1));
      return from_pairs(2 * p, pairs);
    case Kind::CrownLike: {
      require(p >= 1, "crown graph needs r >= 1");
      // Side one is 0..r, side two is r+1..2r+1; vertex i misses its partner r+1+i.
      const std::size_t side = p + 1;
      for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
          if (i != j) pairs.emplace_back(vx(i), vx(side + j));
      return from_pairs(2 * side, pairs);
    }
    case Kind::Prism:
      require(p >= 3, "prism needs n >= 3");
      return cartesian_product(build_family(FamilySpec::cycle(p)), build_family(FamilySpec::path(2)));
    case Kind::DisjointCopies: {
      require(p >= 1, "disjoint copies needs g >= 1");
      require(spec.inner.size() == 1, "disjoint copies needs exactly one inner family");
      Graph part = build_family(spec.inner.front());
      std::vector<Graph> parts(p, part);
      return disjoint_union(parts);
    }
  }
  throw std::invalid_argument("unknown family kind");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  std::vector<VertexPair> pairs;
  pairs.reserve(ng * h.size() + nh * g.size());
  for (std::size_t u = 0; u < ng; ++u)
    for (const auto& e : h.edges()) pairs.emplace_back(vx(u * nh + e.u), vx(u * nh + e.v));
  for (const auto& e : g.edges())
    for (std::size_t v = 0; v < nh; ++v) pairs.emplace_back(vx(e.u * nh + v), vx(e.v * nh + v));
  return from_pairs(ng * nh, pairs);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const Graph parts[] = {g, h};
  return disjoint_union(parts);
}

Graph disjoint_union(std::span<const Graph> parts) {
  require(!parts.empty(), "disjoint union of nothing");
  std::vector<VertexPair> pairs;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& e : part.edges()) pairs.emplace_back(vx(offset + e.u), vx(offset + e.v));
    offset += part.order();
  }
  return from_pairs(offset, pairs);
}

}  // namespace qspectra
