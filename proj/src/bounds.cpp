#include "qspectra/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qspectra/families.hpp"
#include "qspectra/tolerance.hpp"

namespace qspectra {

namespace {

struct CatalogEntry {
  BoundId id;
  std::string_view name;
  Direction direction;
};

constexpr CatalogEntry kCatalog[] = {
    {BoundId::LowerGan1, "L-GAN1", Direction::Lower},
    {BoundId::LowerGan2, "L-GAN2", Direction::Lower},
    {BoundId::LowerGan3, "L-GAN3", Direction::Lower},
    {BoundId::LowerGan4, "L-GAN4", Direction::Lower},
    {BoundId::LowerGan5, "L-GAN5", Direction::Lower},
    {BoundId::LowerThm1, "L-THM1", Direction::Lower},
    {BoundId::LowerCor4, "L-COR4", Direction::Lower},
    {BoundId::LowerCor5, "L-COR5", Direction::Lower},
    {BoundId::LowerThm2, "L-THM2", Direction::Lower},
    {BoundId::LowerCor2, "L-COR2", Direction::Lower},
    {BoundId::LowerCor3, "L-COR3", Direction::Lower},
    {BoundId::UpperAbr1, "U-ABR1", Direction::Upper},
    {BoundId::UpperAbr2, "U-ABR2", Direction::Upper},
    {BoundId::UpperLi, "U-LI", Direction::Upper},
    {BoundId::UpperGan, "U-GAN", Direction::Upper},
    {BoundId::UpperThm3, "U-THM3", Direction::Upper},
    {BoundId::UpperCor6, "U-COR6", Direction::Upper},
    {BoundId::UpperCor7, "U-COR7", Direction::Upper},
};

const CatalogEntry& entry(BoundId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e;
  throw UnknownBoundError(std::to_string(static_cast<int>(id)));
}

}  // namespace

std::string_view to_string(BoundId id) { return entry(id).name; }

BoundId bound_from_string(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  throw UnknownBoundError(std::string(name));
}

std::string_view to_string(Direction d) { return d == Direction::Lower ? "lower" : "upper"; }
std::string_view to_string(Strictness s) {
  return s == Strictness::Strict ? "strict" : "non-strict";
}

CParameter c_parameter(std::size_t n, std::size_t m) {
  const Int128 N = static_cast<Int128>(n);
  const Int128 M = static_cast<Int128>(m);
  CParameter p;
  p.c = M * (N * N * N - N * N - 2 * M * N + 4 * M);
  p.sqrt_c = std::sqrt(static_cast<long double>(p.c));
  const double dn = static_cast<double>(n);
  p.sqrt_c_over_n = p.sqrt_c / dn;
  p.sqrt_c_over_2n = p.sqrt_c / (2.0 * dn);
  p.sqrt_c_over_n3 = p.sqrt_c / (dn * dn * dn);
  return p;
}

std::string int128_to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool BoundResult::violated(double qe) const {
  return applicable && gap < -tol::bound_gap(qe);
}

GraphAnalysis::GraphAnalysis(Graph graph)
    : g(std::move(graph)),
      stats(degree_stats(g)),
      shape(structure(g)),
      q(q_spectrum(g)),
      gamma(gamma_sequence(q, stats)),
      qe(stats.m == 0 ? 0.0 : signless_laplacian_energy(q, stats)),
      c(c_parameter(stats.n, stats.m)) {}

namespace {

struct Quantities {
  double n, m, m1, max_deg, min_deg, avg, spread;
  double t;  // 2m + M1 - 4m^2/n, the sum of squared gammas
};

Quantities quantities(const GraphAnalysis& a) {
  const auto& s = a.stats;
  Quantities x{};
  x.n = static_cast<double>(s.n);
  x.m = static_cast<double>(s.m);
  x.m1 = static_cast<double>(s.zagreb_m1);
  x.max_deg = static_cast<double>(s.max_degree);
  x.min_deg = static_cast<double>(s.min_degree);
  x.avg = s.average_degree();
  x.spread = x.max_deg - x.min_deg;
  const Int128 N = static_cast<Int128>(s.n);
  const Int128 M = static_cast<Int128>(s.m);
  const Int128 numerator = N * (2 * M + s.zagreb_m1) - 4 * M * M;
  x.t = static_cast<double>(numerator) / x.n;
  return x;
}

BoundResult start(BoundId id) {
  BoundResult r;
  r.id = id;
  r.direction = entry(id).direction;
  return r;
}

BoundResult not_applicable(BoundResult r, std::string reason) {
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

// Hypothesis comparison gamma_n >= threshold, forgiving solver noise.
bool gamma_at_least(const GraphAnalysis& a, double threshold) {
  return a.gamma.gamma_n + a.gamma.zero_threshold >= threshold;
}

double gan4_value(const Quantities& x, double d2, bool adjacent) {
  const double head = 2.0 * x.m1 / x.m - 4.0 * x.avg;
  if (!adjacent) return head + 2.0 * d2;
  return head + x.max_deg + d2 - std::sqrt((x.max_deg - d2) * (x.max_deg - d2) + 4.0);
}

double gan5_general(const Quantities& x, double d_second, bool adjacent) {
  const double head = 4.0 * x.avg;
  if (adjacent) return head - 2.0 * x.min_deg - 2.0 * d_second;
  return head - (2.0 * d_second + x.max_deg + x.min_deg -
                 std::sqrt(x.spread * x.spread + 4.0));
}

// v1 = lowest index with the extreme degree; v2 = lowest index != v1 whose
// degree is extreme among the remaining vertices.
VertexPair extreme_pair(const Graph& g, bool largest) {
  const auto& d = g.degrees();
  const auto better = [&](std::size_t a, std::size_t b) { return largest ? a > b : a < b; };
  Vertex v1 = 0;
  for (Vertex v = 1; v < d.size(); ++v)
    if (better(d[v], d[v1])) v1 = v;
  Vertex v2 = v1 == 0 ? 1 : 0;
  for (Vertex v = 0; v < d.size(); ++v)
    if (v != v1 && better(d[v], d[v2])) v2 = v;
  return {v1, v2};
}

// Every (v1, v2) a reader could pick under the same degree description.
std::vector<VertexPair> valid_pairs(const Graph& g, bool largest) {
  const auto& d = g.degrees();
  const std::size_t extreme =
      largest ? *std::max_element(d.begin(), d.end()) : *std::min_element(d.begin(), d.end());
  std::vector<VertexPair> pairs;
  for (Vertex v1 = 0; v1 < d.size(); ++v1) {
    if (d[v1] != extreme) continue;
    std::optional<std::size_t> second;
    for (Vertex v = 0; v < d.size(); ++v) {
      if (v == v1) continue;
      if (!second || (largest ? d[v] > *second : d[v] < *second)) second = d[v];
    }
    for (Vertex v2 = 0; v2 < d.size(); ++v2)
      if (v2 != v1 && d[v2] == *second) pairs.emplace_back(v1, v2);
  }
  return pairs;
}

template <typename F>
void record_pair_range(BoundResult& r, const Graph& g, bool largest, F&& value_of) {
  if (g.order() > 20) return;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& [u, v] : valid_pairs(g, largest)) {
    const double val = value_of(u, v);
    lo = std::min(lo, val);
    hi = std::max(hi, val);
  }
  r.pair_min = lo;
  r.pair_max = hi;
}

bool is_null_or_single_edge(const Graph& g) { return g.size() <= 1; }

bool is_u_thm3_extremal(const Graph& g) {
  return is_complete(g) || is_perfect_matching_graph(g) || detect_srg(g).is_s_nr;
}

void diagnose(BoundResult& r, const GraphAnalysis& a, std::string condition,
              std::optional<bool> met) {
  r.gap = r.direction == Direction::Lower ? a.qe - r.value : r.value - a.qe;
  auto& eq = r.equality;
  eq.tight = std::fabs(r.gap) <= tol::bound_gap(a.qe);
  eq.condition = std::move(condition);
  eq.condition_met = met;
  if (r.strictness == Strictness::Strict) {
    eq.near_tight_but_strict = eq.tight;
    eq.consistent = !eq.tight;
  } else {
    eq.consistent = !met || *met == eq.tight;
  }
}

BoundResult evaluate(const GraphAnalysis& a, BoundId id) {
  BoundResult r = start(id);
  const Quantities x = quantities(a);
  const auto& s = a.stats;
  const auto& shape = a.shape;
  const Graph& g = a.g;
  r.applicable = true;

  // QE of an edgeless graph is 0 and only U-ABR1 speaks about it.
  if (s.m == 0 && id != BoundId::UpperAbr1) return not_applicable(r, "requires m >= 1");
  const bool cited = id == BoundId::LowerGan1 || id == BoundId::LowerGan2 ||
                     id == BoundId::LowerGan3 || id == BoundId::LowerGan4 ||
                     id == BoundId::LowerGan5 || id == BoundId::UpperAbr2 ||
                     id == BoundId::UpperGan;
  if (cited && !shape.connected) return not_applicable(r, "requires a connected graph");

  switch (id) {
    case BoundId::LowerGan1:
      r.value = 2.0 * (x.m1 / x.m - x.avg);
      diagnose(r, a, "K_{1,n-1}", is_star(g));
      break;

    case BoundId::LowerGan2:
      r.value = 2.0 * x.max_deg + 2.0 - 2.0 * x.avg;
      diagnose(r, a, "K_{1,n-1}", is_star(g));
      break;

    case BoundId::LowerGan3:
      r.value = x.max_deg + x.min_deg + std::sqrt(x.spread * x.spread + 4.0 * x.max_deg) -
                2.0 * x.avg;
      diagnose(r, a, "K_{1,n-1}", is_star(g));
      break;

    case BoundId::LowerGan4: {
      const auto [v1, v2] = extreme_pair(g, true);
      const bool adjacent = g.adjacent(v1, v2);
      r.selected_pair = VertexPair{v1, v2};
      r.case_label = adjacent ? "v1~v2" : "v1!~v2";
      r.value = gan4_value(x, static_cast<double>(g.degree(v2)), adjacent);
      record_pair_range(r, g, true, [&](Vertex u, Vertex v) {
        return gan4_value(x, static_cast<double>(g.degree(v)), g.adjacent(u, v));
      });
      diagnose(r, a, "K_{n-2,2}", s.n >= 3 && is_complete_bipartite(g, s.n - 2, 2));
      break;
    }

    case BoundId::LowerGan5: {
      const auto [vn, vn1] = extreme_pair(g, false);
      const bool adjacent = g.adjacent(vn, vn1);
      const double general = gan5_general(x, static_cast<double>(g.degree(vn1)), adjacent);
      r.selected_pair = VertexPair{vn, vn1};
      r.variants.emplace_back("general", general);
      if (shape.bipartite()) {
        r.case_label = "bipartite";
        r.value = 4.0 * x.avg - 2.0 * x.min_deg;
      } else {
        r.case_label = adjacent ? "vn~vn-1" : "vn!~vn-1";
        r.value = general;
        record_pair_range(r, g, false, [&](Vertex u, Vertex v) {
          return gan5_general(x, static_cast<double>(g.degree(v)), g.adjacent(u, v));
        });
      }
      diagnose(r, a, "K_{1,2}", is_complete_bipartite(g, 1, 2));
      break;
    }

    case BoundId::LowerThm1: {
      if (a.gamma.gamma_n_is_zero) return not_applicable(r, "requires gamma_n > 0");
      const double g1 = a.gamma.gamma1;
      const double gn = a.gamma.gamma_n;
      r.value = 2.0 * std::sqrt(x.t * x.n) * std::sqrt(g1 * gn) / (g1 + gn);
      diagnose(r, a, "(n/2)K_2 or gK_{r+1} u h(K_{r+1,r+1}\\F), r=2m/n>=2",
               is_perfect_matching_graph(g) || is_complete_crown_union(g));
      break;
    }

    case BoundId::LowerCor4:
      if (!shape.connected) return not_applicable(r, "requires a connected graph");
      if (!gamma_at_least(a, a.c.sqrt_c_over_2n))
        return not_applicable(r, "requires gamma_n >= sqrt(c)/(2n)");
      r.value = (2.0 * std::sqrt(2.0) / 3.0) *
                std::sqrt((2.0 * x.m + 0.5 * x.spread * x.spread) * x.n);
      diagnose(r, a, "K_3", is_complete(g) && s.n == 3);
      break;

    case BoundId::LowerCor5:
      if (!shape.connected) return not_applicable(r, "requires a connected graph");
      if (!gamma_at_least(a, a.c.sqrt_c_over_n3))
        return not_applicable(r, "requires gamma_n >= sqrt(c)/n^3");
      r.strictness = Strictness::Strict;
      r.value = 2.0 * x.n * std::sqrt((2.0 * x.m + 0.5 * x.spread * x.spread) * x.n) /
                (1.0 + x.n * x.n);
      diagnose(r, a, "", std::nullopt);
      break;

    case BoundId::LowerThm2:
      if (!shape.connected) return not_applicable(r, "requires a connected graph");
      if (!a.gamma.gamma_n_is_zero) return not_applicable(r, "requires gamma_n = 0");
      r.value = x.t / a.gamma.gamma1;
      diagnose(r, a, "K_{n/2,n/2}", is_balanced_complete_bipartite(g));
      break;

    case BoundId::LowerCor2:
      if (!shape.connected) return not_applicable(r, "requires a connected graph");
      if (!a.gamma.gamma_n_is_zero) return not_applicable(r, "requires gamma_n = 0");
      if (shape.regular) {
        r.case_label = "regular";
        r.value = x.n;
        diagnose(r, a, "K_{n/2,n/2}", is_balanced_complete_bipartite(g));
      } else {
        r.case_label = "nonregular";
        r.strictness = Strictness::Strict;
        r.value = (2.0 * x.m + 0.5 * x.spread * x.spread) / (2.0 * x.max_deg - x.avg);
        diagnose(r, a, "", std::nullopt);
      }
      break;

    case BoundId::LowerCor3: {
      if (!shape.connected || !shape.regular)
        return not_applicable(r, "requires a connected regular graph");
      if (a.gamma.gamma_n_is_zero) {
        r.case_label = "gamma_n=0";
        r.value = x.n;
        diagnose(r, a, "K_{n/2,n/2}", is_balanced_complete_bipartite(g));
      } else {
        r.case_label = "gamma_n>0";
        const double rr = x.max_deg;
        const double gn = a.gamma.gamma_n;
        r.value = 2.0 * x.n * rr * std::sqrt(gn) / (rr + gn);
        diagnose(r, a, "K_n or K_{n/2,n/2}\\F", is_complete(g) || is_crown(g));
      }
      break;
    }

    case BoundId::UpperAbr1:
      r.value = 4.0 * x.m * (1.0 - 1.0 / x.n);
      diagnose(r, a, "null graph or one edge plus isolated vertices", is_null_or_single_edge(g));
      break;

    case BoundId::UpperAbr2: {
      if (s.n < 3) return not_applicable(r, "requires n >= 3");
      const double inner = x.m / 2.0 - (x.avg - 1.0);
      const double outer = 2.0 * (x.m1 - 2.0 * x.m);
      if (inner < 0.0 || outer < 0.0) return not_applicable(r, "negative radicand");
      r.value = (1.0 + std::sqrt(inner)) * std::sqrt(outer);
      diagnose(r, a, "", std::nullopt);
      break;
    }

    case BoundId::UpperLi: {
      if (s.n < 2) return not_applicable(r, "requires n >= 2");
      const double radicand =
          (x.n - 2.0) * (2.0 * x.m * x.m / (x.n - 1.0) +
                         (8.0 * x.m * x.max_deg - 4.0 * x.m * x.m) / x.n + x.m * x.n - 4.0);
      if (radicand < 0.0) return not_applicable(r, "negative radicand");
      r.value = 2.0 * x.m / (x.n - 1.0) + x.n - 2.0 + std::sqrt(radicand);
      diagnose(r, a, "K_2", is_complete(g) && s.n == 2);
      break;
    }

    case BoundId::UpperGan:
      r.value = 2.0 * (2.0 * x.m + 1.0 - x.max_deg - x.avg);
      diagnose(r, a, "K_{1,n-1}", is_star(g));
      break;

    case BoundId::UpperThm3: {
      const Int128 N = static_cast<Int128>(s.n);
      const Int128 M = static_cast<Int128>(s.m);
      const bool first_case = N * (2 * M + s.zagreb_m1) <= 8 * M * M;
      if (first_case) {
        r.case_label = "n<=8m^2/(2m+M1)";
        r.value = x.avg + std::sqrt(std::max(0.0, (x.n - 1.0) * (x.t - x.avg * x.avg)));
        diagnose(r, a, "K_n, (n/2)K_2 or S(n,r)", is_u_thm3_extremal(g));
      } else {
        r.case_label = "n>8m^2/(2m+M1)";
        r.strictness = Strictness::Strict;
        r.value = std::sqrt(x.t / x.n) + std::sqrt((x.n - 1.0) * (x.t - x.t / x.n));
        diagnose(r, a, "", std::nullopt);
      }
      break;
    }

    case BoundId::UpperCor6: {
      if (!shape.connected || shape.regular)
        return not_applicable(r, "requires a connected nonregular graph");
      r.strictness = Strictness::Strict;
      const double d2 = x.spread * x.spread;
      const double split = 4.0 * x.m * (std::sqrt(1.0 + d2) - 1.0) / d2;
      if (x.n <= split) {
        r.case_label = "n<=split";
        r.value = x.avg + std::sqrt((x.n - 1.0) * (2.0 * x.m + x.n / 4.0 * d2 - x.avg * x.avg));
      } else {
        r.case_label = "n>split";
        r.value = std::sqrt(x.avg + d2 / 4.0) +
                  std::sqrt((x.n - 1.0) * (2.0 * x.m + (x.n - 1.0) / 4.0 * d2 - x.avg));
      }
      r.variants.emplace_back("split", split);
      diagnose(r, a, "", std::nullopt);
      break;
    }

    case BoundId::UpperCor7:
      if (!shape.regular) return not_applicable(r, "requires a regular graph");
      r.value = x.avg + std::sqrt(std::max(0.0, (x.n - 1.0) * (2.0 * x.m - x.avg * x.avg)));
      diagnose(r, a, "K_n, (n/2)K_2 or S(n,r)", is_u_thm3_extremal(g));
      break;
  }
  return r;
}

}  // namespace

BoundResult evaluate_bound(const GraphAnalysis& a, BoundId id) { return evaluate(a, id); }

BoundResult evaluate_bound(const Graph& g, BoundId id) {
  return evaluate(GraphAnalysis(g), id);
}

std::vector<BoundResult> all_bounds(const GraphAnalysis& a) {
  std::vector<BoundResult> out;
  out.reserve(kAllBounds.size());
  for (BoundId id : kAllBounds) out.push_back(evaluate(a, id));
  return out;
}

std::vector<BoundResult> all_bounds(const Graph& g) { return all_bounds(GraphAnalysis(g)); }

}  // namespace qspectra
