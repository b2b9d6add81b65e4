#include "qspectra/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "qspectra/tolerance.hpp"

namespace qspectra {

namespace {

using ComponentSignature = std::tuple<std::size_t, std::size_t, bool>;  // order, size, bipartite

std::vector<ComponentSignature> component_signatures(const Graph& g, const Structure& s) {
  std::vector<ComponentSignature> out;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    std::size_t degree_sum = 0;
    for (Vertex v : s.components[i]) degree_sum += g.degree(v);
    out.emplace_back(s.components[i].size(), degree_sum / 2, s.component_bipartite[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

bool all_degrees(const Graph& g, std::size_t k) {
  return std::all_of(g.degrees().begin(), g.degrees().end(),
                     [k](std::size_t d) { return d == k; });
}

// Colour-class sizes of a connected bipartite graph.
std::pair<std::size_t, std::size_t> bipartition_sizes(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  std::size_t counts[2] = {1, 0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (colour[w] >= 0) continue;
      colour[w] = 1 - colour[u];
      ++counts[colour[w]];
      queue.push_back(w);
    }
  }
  return {counts[0], counts[1]};
}

}  // namespace

bool structurally_matches(const Graph& g, const Graph& reference) {
  if (g.order() != reference.order() || g.size() != reference.size()) return false;
  if (sorted_degrees(g) != sorted_degrees(reference)) return false;
  if (component_signatures(g, structure(g)) !=
      component_signatures(reference, structure(reference)))
    return false;
  const Spectrum a = q_spectrum(g);
  const Spectrum b = q_spectrum(reference);
  return multiset_equal(a.values, b.values, tol::multiset(b.spectral_radius()));
}

bool matches_family(const Graph& g, const FamilySpec& spec) {
  return structurally_matches(g, build_family(spec));
}

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  return *std::max_element(g.degrees().begin(), g.degrees().end()) == n - 1;
}

bool is_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
  if (a == 0 || b == 0 || g.order() != a + b || g.size() != a * b) return false;
  const Structure s = structure(g);
  if (!s.connected || !s.bipartite()) return false;
  const auto [x, y] = bipartition_sizes(g);
  return (x == a && y == b) || (x == b && y == a);
}

bool is_balanced_complete_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  return n >= 2 && n % 2 == 0 && is_complete_bipartite(g, n / 2, n / 2);
}

bool is_perfect_matching_graph(const Graph& g) { return g.order() >= 2 && all_degrees(g, 1); }

bool is_crown(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4 || n % 2 != 0 || !all_degrees(g, n / 2 - 1)) return false;
  return structure(g).bipartite();
}

bool is_complete_crown_union(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || (2 * g.size()) % n != 0) return false;
  const std::size_t r = 2 * g.size() / n;
  if (r < 2 || !all_degrees(g, r)) return false;
  // An r-regular component on r+1 vertices is K_{r+1}; an r-regular
  // bipartite one on 2(r+1) vertices is the crown.
  const Structure s = structure(g);
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const std::size_t size = s.components[i].size();
    if (size == r + 1) continue;
    if (size == 2 * (r + 1) && s.component_bipartite[i]) continue;
    return false;
  }
  return true;
}

std::string_view to_string(QPattern::Prediction p) {
  switch (p) {
    case QPattern::Prediction::None: return "none";
    case QPattern::Prediction::Crown: return "crown";
    case QPattern::Prediction::Complete: return "complete";
    case QPattern::Prediction::CompleteCrownUnion: return "complete-crown-union";
  }
  return "?";
}

std::optional<QPattern> classify_q_pattern(const Graph& g) {
  const Structure shape = structure(g);
  if (!shape.regular || !shape.regularity_degree || *shape.regularity_degree < 2)
    return std::nullopt;

  QPattern p;
  p.r = *shape.regularity_degree;
  const double r = static_cast<double>(p.r);
  const Spectrum q = q_spectrum(g);
  const double width = tol::grouping(q.spectral_radius());
  const double targets[4] = {2.0 * r, r + 1.0, r - 1.0, 0.0};
  std::size_t* counters[4] = {&p.count_2r, &p.count_r_plus_1, &p.count_r_minus_1, &p.count_zero};
  for (double v : q.values) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < 4; ++t)
      if (std::fabs(v - targets[t]) < std::fabs(v - targets[best])) best = t;
    if (std::fabs(v - targets[best]) <= width)
      ++*counters[best];
    else
      p.residue.push_back(v);
  }

  if (!p.residue.empty()) {
    p.note = "eigenvalues outside {2r, r+1, r-1, 0}";
    return p;
  }

  const std::size_t n = g.order();
  const std::size_t s = p.s();
  const std::size_t s1 = p.count_2r;
  const std::size_t a = p.count_r_plus_1;
  const std::size_t b = p.count_r_minus_1;

  if (s1 == 1) {
    if (p.count_zero == 1) {
      p.prediction = QPattern::Prediction::Crown;
      p.crown_copies = 1;
      p.arithmetic_consistent = n % 2 == 0 && a == p.r && b == p.r && p.r == n / 2 - 1;
    } else if (p.count_zero == 0) {
      p.prediction = QPattern::Prediction::Complete;
      p.complete_copies = 1;
      p.arithmetic_consistent = a == 0 && b == p.r && p.r == n - 1;
    } else {
      p.note = "more zero eigenvalues than components";
      return p;
    }
  } else if (s1 > 1 && s >= s1 && s <= 2 * s1) {
    // s = s' (no bipartite component) is outside the s > s' hypothesis; every
    // component then carries the pattern of K_{r+1} on its own.
    p.prediction = QPattern::Prediction::CompleteCrownUnion;
    p.complete_copies = 2 * s1 - s;
    p.crown_copies = s - s1;
    p.arithmetic_consistent = n % s == 0 && p.r == n / s - 1 && a == p.r * (s - s1) &&
                              b == p.r * s1;
    if (s == s1) p.note = "all components complete";
  } else {
    p.note = "no matching lemma";
    return p;
  }

  std::vector<Graph> parts;
  for (std::size_t i = 0; i < p.complete_copies; ++i) parts.push_back(complete_graph(p.r + 1));
  for (std::size_t i = 0; i < p.crown_copies; ++i)
    parts.push_back(build_family(FamilySpec::crown(p.r)));
  p.verified = p.arithmetic_consistent && structurally_matches(g, disjoint_union(parts));
  return p;
}

SrgDetection detect_srg(const Graph& g) {
  SrgDetection out;
  const std::size_t n = g.order();
  const Structure shape = structure(g);
  if (!shape.regular || n < 3) return out;
  const std::size_t r = *shape.regularity_degree;

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  std::optional<std::size_t> a;
  std::optional<std::size_t> c;
  bool ok = true;
  for (Vertex u = 0; u < n && ok; ++u) {
    for (Vertex v = u + 1; v < n && ok; ++v) {
      std::size_t common = 0;
      for (Vertex w : g.neighbors(u)) common += static_cast<std::size_t>(adj[v][w]);
      auto& slot = adj[u][v] ? a : c;
      if (!slot)
        slot = common;
      else if (*slot != common)
        ok = false;
    }
  }
  if (ok && a && c) {
    out.params = SrgParams{n, r, *a, *c};
    out.is_s_nr = *a == *c && (n - 1) * *a == r * (r - 1);
  }
  if (shape.connected) out.three_eigenvalue_criterion = a_spectrum(g).distinct_count() == 3;
  return out;
}

double prism_gamma_min(std::size_t n) {
  if (n < 3) throw std::invalid_argument("prism requires cycle length >= 3");
  if (n % 3 == 0) return 0.0;
  const double two_pi_over_n = 2.0 * std::numbers::pi / static_cast<double>(n);
  const std::size_t rem = n % 6;
  if (rem == 1 || rem == 2) return 2.0 * std::cos(two_pi_over_n * static_cast<double>(n / 6)) - 1.0;
  return 1.0 - 2.0 * std::cos(two_pi_over_n * static_cast<double>((n + 5) / 6));
}

PrismBounds prism_bounds(std::size_t n) {
  if (n < 3) throw std::invalid_argument("prism requires cycle length >= 3");
  const double dn = static_cast<double>(n);
  PrismBounds b;
  b.upper = 3.0 + std::sqrt(3.0 * (2.0 * dn - 1.0) * (2.0 * dn - 3.0));
  const std::size_t rem = n % 6;
  if (n % 3 == 0) {
    b.lower_case = "n%3==0";
    b.lower = 2.0 * dn;
  } else if (rem == 1 || rem == 2) {
    b.lower_case = "n%6 in {1,2}";
    const double cs = std::cos(2.0 * std::numbers::pi * static_cast<double>(n / 6) / dn);
    b.lower = 6.0 * dn * std::sqrt(2.0 * cs - 1.0) / (1.0 + cs);
  } else {
    b.lower_case = "n%6 in {4,5}";
    const double cs = std::cos(2.0 * std::numbers::pi * static_cast<double>((n + 5) / 6) / dn);
    b.lower = 6.0 * dn * std::sqrt(1.0 - 2.0 * cs) / (2.0 - cs);
  }
  return b;
}

CubicBounds cubic_bounds(const Graph& g) { return cubic_bounds(g, gamma_sequence(g)); }

CubicBounds cubic_bounds(const Graph& g, const GammaSequence& gamma) {
  if (!all_degrees(g, 3)) throw std::invalid_argument("cubic bounds require a 3-regular graph");
  const double n = static_cast<double>(g.order());
  CubicBounds b;
  b.upper = 3.0 + std::sqrt(3.0 * (n - 1.0) * (n - 3.0));
  b.gamma_min = gamma.gamma_n;
  if (gamma.gamma_n_is_zero) {
    b.lower_case = "gamma=0";
    b.lower = n;
  } else if (gamma.gamma_n >= 1.0 - 1e-9) {
    b.lower_case = "gamma>=1";
    b.lower = 1.5 * n;
  } else {
    b.lower_case = "0<gamma<1";
    b.lower = 6.0 * n * std::sqrt(gamma.gamma_n) / (3.0 + gamma.gamma_n);
  }
  return b;
}

}  // namespace qspectra
