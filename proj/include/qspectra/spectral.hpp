#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qspectra/eigen.hpp"
#include "qspectra/graph.hpp"

namespace qspectra {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

std::string_view to_string(MatrixKind kind);

struct EigenGroup {
  double value = 0.0;  // mean of the clustered eigenvalues
  std::size_t multiplicity = 0;
};

/// Clusters a descending sequence: neighbours closer than `tolerance` share a group.
std::vector<EigenGroup> group_eigenvalues(std::span<const double> descending, double tolerance);

/// Sorts both sides and compares elementwise within `tolerance`.
bool multiset_equal(std::span<const double> a, std::span<const double> b, double tolerance);

struct Spectrum {
  MatrixKind kind = MatrixKind::SignlessLaplacian;
  std::vector<double> values;  // descending, length n
  std::vector<EigenGroup> groups;
  EigenSolveReport report;

  double spectral_radius() const;
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  std::size_t distinct_count() const { return groups.size(); }
  // Number of values within the grouping tolerance of `target`.
  std::size_t multiplicity_near(double target) const;
  std::size_t zero_multiplicity() const;
};

SymmetricMatrix graph_matrix(const Graph& g, MatrixKind kind);

Spectrum spectrum(const Graph& g, MatrixKind kind);
inline Spectrum q_spectrum(const Graph& g) { return spectrum(g, MatrixKind::SignlessLaplacian); }
inline Spectrum l_spectrum(const Graph& g) { return spectrum(g, MatrixKind::Laplacian); }
inline Spectrum a_spectrum(const Graph& g) { return spectrum(g, MatrixKind::Adjacency); }

// --- executable spectral facts --------------------------------------------

enum class SpectralFact {
  TraceSum,                    // sum q_i = 2m
  TraceSquares,                // sum q_i^2 = 2m + M1
  ZeroMultiplicity,            // mult(0) = number of bipartite components
  SpectralRadiusLower,         // q_1 >= 4m/n, equality iff regular
  SmallestUpper,               // q_min <= 2m/n - 1 (connected, n >= 2), equality iff complete
  SpectralRadiusDegreeLower,   // 2*delta <= q_1, equality iff regular (connected)
  SpectralRadiusDegreeUpper,   // q_1 <= 2*Delta, equality iff regular (connected)
};

std::string_view to_string(SpectralFact fact);

struct FactCheck {
  SpectralFact fact{};
  bool applicable = true;
  bool holds = true;
  double lhs = 0.0;  // the inequality reads lhs <= rhs (or lhs == rhs)
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs for inequalities, -|lhs - rhs| for identities
  bool equality_observed = false;
  std::optional<bool> equality_expected;  // none when no equality condition applies
  bool equality_consistent = true;
  std::string note;
};

struct SpectralFactReport {
  std::vector<FactCheck> checks;
  bool all_hold() const;
  bool all_consistent() const;
};

SpectralFactReport check_spectral_lemmas(const Graph& g);
SpectralFactReport check_spectral_lemmas(const Graph& g, const DegreeStats& stats,
                                         const Structure& shape, const Spectrum& q);

/// The spectrum of G x H against all pairwise sums of the factor spectra.
bool product_spectrum_check(const Graph& g, const Graph& h, MatrixKind kind);

}  // namespace qspectra
