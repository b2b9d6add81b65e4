#pragma once

#include <algorithm>

namespace qspectra {

// Process-wide multiplier applied to every comparison tolerance below.
// Read once from QSPECTRA_TOL (a positive real); defaults to 1.
double tolerance_scale();

// True when QSPECTRA_TOL was set but could not be parsed as a positive number.
bool tolerance_env_invalid();

namespace tol {

inline double radius_scale(double spectral_radius) {
  return std::max(1.0, spectral_radius) * tolerance_scale();
}

// Clustering width used when counting eigenvalue multiplicities.
inline double grouping(double spectral_radius) { return 1e-6 * radius_scale(spectral_radius); }

// Values at or below this magnitude count as zero eigenvalues / zero gammas.
inline double zero(double spectral_radius) { return 1e-7 * radius_scale(spectral_radius); }

// Elementwise tolerance for sorted multiset comparison.
inline double multiset(double spectral_radius) { return 1e-7 * radius_scale(spectral_radius); }

// A bound is tight when |gap| falls under this; also the sandwich slack.
inline double bound_gap(double qe) { return 1e-6 * std::max(1.0, qe) * tolerance_scale(); }

// Eigensolver stopping rule: off-diagonal Frobenius norm relative to the matrix norm.
inline constexpr double kJacobiRelativeOffNorm = 1e-12;
inline constexpr int kJacobiMaxSweeps = 50;

}  // namespace tol
}  // namespace qspectra
