#include "qspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "qspectra/tolerance.hpp"

namespace qspectra {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless_laplacian";
  }
  return "?";
}

std::vector<EigenGroup> group_eigenvalues(std::span<const double> descending, double tolerance) {
  std::vector<EigenGroup> groups;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    if (count > 0 && descending[i - 1] - descending[i] > tolerance) {
      groups.push_back({sum / static_cast<double>(count), count});
      sum = 0.0;
      count = 0;
    }
    sum += descending[i];
    ++count;
  }
  if (count > 0) groups.push_back({sum / static_cast<double>(count), count});
  return groups;
}

bool multiset_equal(std::span<const double> a, std::span<const double> b, double tolerance) {
  if (a.size() != b.size()) return false;
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::fabs(x[i] - y[i]) > tolerance) return false;
  }
  return true;
}

double Spectrum::spectral_radius() const {
  if (values.empty()) return 0.0;
  return std::max(std::fabs(values.front()), std::fabs(values.back()));
}

std::size_t Spectrum::multiplicity_near(double target) const {
  const double width = tol::grouping(spectral_radius());
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [&](double v) { return std::fabs(v - target) <= width; }));
}

std::size_t Spectrum::zero_multiplicity() const {
  const double width = tol::zero(spectral_radius());
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [&](double v) { return std::fabs(v) <= width; }));
}

SymmetricMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  const std::size_t n = g.order();
  SymmetricMatrix m(n);
  const double off = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = off;
    m(e.v, e.u) = off;
  }
  if (kind != MatrixKind::Adjacency) {
    for (std::size_t v = 0; v < n; ++v) m(v, v) = static_cast<double>(g.degree(static_cast<Vertex>(v)));
  }
  return m;
}

Spectrum spectrum(const Graph& g, MatrixKind kind) {
  auto solved = symmetric_eigenvalues(graph_matrix(g, kind));
  Spectrum s;
  s.kind = kind;
  s.values = std::move(solved.values);
  s.report = solved.report;
  s.groups = group_eigenvalues(s.values, tol::grouping(s.spectral_radius()));
  return s;
}

std::string_view to_string(SpectralFact fact) {
  switch (fact) {
    case SpectralFact::TraceSum: return "trace-sum";
    case SpectralFact::TraceSquares: return "trace-squares";
    case SpectralFact::ZeroMultiplicity: return "zero-multiplicity-bipartite-components";
    case SpectralFact::SpectralRadiusLower: return "q1-at-least-4m/n";
    case SpectralFact::SmallestUpper: return "qmin-at-most-2m/n-1";
    case SpectralFact::SpectralRadiusDegreeLower: return "q1-at-least-2delta";
    case SpectralFact::SpectralRadiusDegreeUpper: return "q1-at-most-2Delta";
  }
  return "?";
}

bool SpectralFactReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const FactCheck& c) { return c.holds; });
}

bool SpectralFactReport::all_consistent() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FactCheck& c) { return c.equality_consistent; });
}

namespace {

FactCheck inequality(SpectralFact fact, double lhs, double rhs, double tolerance,
                     const std::optional<bool>& equality_expected) {
  FactCheck c;
  c.fact = fact;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.holds = lhs <= rhs + tolerance;
  c.equality_observed = std::fabs(lhs - rhs) <= tolerance;
  c.equality_expected = equality_expected;
  c.equality_consistent = !equality_expected || *equality_expected == c.equality_observed;
  return c;
}

FactCheck identity(SpectralFact fact, double lhs, double rhs, double tolerance) {
  FactCheck c;
  c.fact = fact;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = -std::fabs(lhs - rhs);
  c.holds = std::fabs(lhs - rhs) <= tolerance;
  c.equality_observed = c.holds;
  return c;
}

}  // namespace

SpectralFactReport check_spectral_lemmas(const Graph& g) {
  return check_spectral_lemmas(g, degree_stats(g), structure(g), q_spectrum(g));
}

SpectralFactReport check_spectral_lemmas(const Graph& /*g*/, const DegreeStats& stats,
                                         const Structure& shape, const Spectrum& q) {
  SpectralFactReport report;
  const double n = static_cast<double>(stats.n);
  const double m = static_cast<double>(stats.m);
  const double scale = tolerance_scale();
  const double tolerance = tol::multiset(q.spectral_radius());
  const bool complete = stats.m == stats.n * (stats.n - 1) / 2;

  double sum = 0.0;
  double squares = 0.0;
  for (double v : q.values) {
    sum += v;
    squares += v * v;
  }
  report.checks.push_back(identity(SpectralFact::TraceSum, sum, 2.0 * m, 1e-8 * n * scale));
  report.checks.push_back(identity(SpectralFact::TraceSquares, squares,
                                   2.0 * m + static_cast<double>(stats.zagreb_m1),
                                   1e-7 * n * scale));

  {
    FactCheck c;
    c.fact = SpectralFact::ZeroMultiplicity;
    c.lhs = static_cast<double>(q.zero_multiplicity());
    c.rhs = static_cast<double>(shape.bipartite_component_count());
    c.slack = -std::fabs(c.lhs - c.rhs);
    c.holds = q.zero_multiplicity() == shape.bipartite_component_count();
    c.equality_observed = c.holds;
    report.checks.push_back(c);
  }

  report.checks.push_back(inequality(SpectralFact::SpectralRadiusLower, 4.0 * m / n, q.largest(),
                                     tolerance, shape.regular));

  if (shape.connected && stats.n >= 2) {
    report.checks.push_back(inequality(SpectralFact::SmallestUpper, q.smallest(),
                                       2.0 * m / n - 1.0, tolerance, complete));
  } else {
    FactCheck c;
    c.fact = SpectralFact::SmallestUpper;
    c.applicable = false;
    c.note = "requires a connected graph on at least two vertices";
    report.checks.push_back(c);
  }

  const std::optional<bool> regular_if_connected =
      shape.connected ? std::optional<bool>(shape.regular) : std::nullopt;
  report.checks.push_back(inequality(SpectralFact::SpectralRadiusDegreeLower,
                                     2.0 * static_cast<double>(stats.min_degree), q.largest(),
                                     tolerance, regular_if_connected));
  report.checks.push_back(inequality(SpectralFact::SpectralRadiusDegreeUpper, q.largest(),
                                     2.0 * static_cast<double>(stats.max_degree), tolerance,
                                     regular_if_connected));
  return report;
}

bool product_spectrum_check(const Graph& g, const Graph& h, MatrixKind kind) {
  const Spectrum sg = spectrum(g, kind);
  const Spectrum sh = spectrum(h, kind);
  const Spectrum product = spectrum(cartesian_product(g, h), kind);
  std::vector<double> sums;
  sums.reserve(sg.values.size() * sh.values.size());
  for (double a : sg.values)
    for (double b : sh.values) sums.push_back(a + b);
  return multiset_equal(sums, product.values, tol::multiset(product.spectral_radius()));
}

}  // namespace qspectra
