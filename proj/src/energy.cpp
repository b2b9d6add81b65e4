#include "qspectra/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qspectra/simd/kernels.hpp"
#include "qspectra/tolerance.hpp"

namespace qspectra {

double GammaSequence::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double GammaSequence::sum_squares() const {
  return simd::sum_squares(values);
}

GammaSequence gamma_sequence(const Graph& g) { return gamma_sequence(q_spectrum(g), degree_stats(g)); }

GammaSequence gamma_sequence(const Spectrum& q, const DegreeStats& stats) {
  GammaSequence out;
  out.average_degree = stats.average_degree();
  std::vector<std::pair<double, double>> entries;  // (gamma, q)
  entries.reserve(q.values.size());
  for (double v : q.values) entries.emplace_back(std::fabs(v - out.average_degree), v);
  // Ties go to the larger eigenvalue first.
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  for (const auto& [gamma, value] : entries) {
    out.values.push_back(gamma);
    out.source_q.push_back(value);
  }
  out.gamma1 = out.values.front();
  out.gamma_n = out.values.back();
  out.zero_threshold = tol::zero(q.spectral_radius());
  out.zero_count = static_cast<std::size_t>(std::count_if(
      out.values.begin(), out.values.end(), [&](double x) { return x <= out.zero_threshold; }));
  out.gamma_n_is_zero = out.gamma_n <= out.zero_threshold;
  return out;
}

double deviation_energy(std::span<const double> values, double center) {
  return simd::sum_abs_deviation(values, center);
}

double signless_laplacian_energy(const Spectrum& q, const DegreeStats& stats) {
  return deviation_energy(q.values, stats.average_degree());
}

EnergyReport energies(const Graph& g) {
  const DegreeStats stats = degree_stats(g);
  EnergyReport r;
  if (stats.m == 0) {
    r.regular = true;
    r.qe_equals_e = true;
    return r;
  }
  const Spectrum a = a_spectrum(g);
  const Spectrum l = l_spectrum(g);
  const Spectrum q = q_spectrum(g);
  r.e = deviation_energy(a.values, 0.0);
  r.le = deviation_energy(l.values, stats.average_degree());
  r.qe = signless_laplacian_energy(q, stats);
  r.regular = stats.max_degree == stats.min_degree;
  r.qe_equals_e = std::fabs(r.qe - r.e) <= tol::bound_gap(r.qe);
  return r;
}

}  // namespace qspectra
