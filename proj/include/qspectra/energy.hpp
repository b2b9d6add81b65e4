#pragma once

#include <vector>

#include "qspectra/graph.hpp"
#include "qspectra/spectral.hpp"

namespace qspectra {

/// Distances of the Q-eigenvalues from the average degree, largest first.
///
/// gamma_n is the smallest value over all n entries, zeros included; the
/// flag lets each bound apply its own hypothesis about vanishing gammas.
struct GammaSequence {
  std::vector<double> values;    // gamma_i = |q_i - 2m/n|, descending
  std::vector<double> source_q;  // the q_i each gamma came from
  double average_degree = 0.0;
  double gamma1 = 0.0;
  double gamma_n = 0.0;
  bool gamma_n_is_zero = true;
  double zero_threshold = 0.0;
  std::size_t zero_count = 0;

  double sum() const;          // equals QE(G)
  double sum_squares() const;  // equals 2m + M1 - 4m^2/n
};

GammaSequence gamma_sequence(const Graph& g);
GammaSequence gamma_sequence(const Spectrum& q, const DegreeStats& stats);

struct EnergyReport {
  double e = 0.0;   // sum |lambda_i|
  double le = 0.0;  // sum |mu_i - 2m/n|
  double qe = 0.0;  // sum |q_i - 2m/n|
  bool regular = false;
  bool qe_equals_e = false;  // |qe - e| within tolerance; always expected for regular graphs
};

EnergyReport energies(const Graph& g);

/// sum_i |values_i - center|
double deviation_energy(std::span<const double> values, double center);

double signless_laplacian_energy(const Spectrum& q, const DegreeStats& stats);

}  // namespace qspectra
