#include <algorithm>
#include <cmath>
#include <functional>

#include "qspectra/eigen.hpp"
#include "qspectra/simd/kernels.hpp"
#include "qspectra/tolerance.hpp"

namespace qspectra {

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw EigenError("matrix data does not match its dimension");
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double acc = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i + 1 < n; ++i) acc += simd::sum_squares(a.row(i).subspan(i + 1));
  return std::sqrt(2.0 * acc);
}

void validate(const SymmetricMatrix& a, double norm) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j))) throw EigenError("matrix has a non-finite entry");
    }
  }
  const double limit = 1e-12 * std::max(norm, 1e-300);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(a(i, j) - a(j, i)) > limit) throw EigenError("matrix is not symmetric");
    }
  }
}

// One Jacobi rotation zeroing a(p, q), p < q.
void rotate(SymmetricMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Rows p and q take the rotation for every column; the 2x2 block is then
  // set in closed form and the two columns mirrored from the rows.
  simd::rotate_pair(a.row(p), a.row(q), c, s);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    a(k, p) = a(p, k);
    a(k, q) = a(q, k);
  }
}

}  // namespace

EigenResult symmetric_eigenvalues(SymmetricMatrix a) {
  const std::size_t n = a.dim();
  EigenResult result;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += simd::sum_squares(a.row(i));
  const double norm = std::sqrt(total);
  validate(a, norm);

  auto& report = result.report;
  report.frobenius_norm = norm;
  report.threshold = tol::kJacobiRelativeOffNorm * norm;
  report.off_diagonal_norm = off_diagonal_norm(a);

  while (report.off_diagonal_norm > report.threshold) {
    if (report.sweeps == tol::kJacobiMaxSweeps) break;
    ++report.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Late sweeps: drop entries too small to move either diagonal element.
        const double g = 100.0 * std::fabs(apq);
        if (report.sweeps > 4 && std::fabs(a(p, p)) + g == std::fabs(a(p, p)) &&
            std::fabs(a(q, q)) + g == std::fabs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, p, q);
        ++report.rotations;
      }
    }
    report.off_diagonal_norm = off_diagonal_norm(a);
  }
  report.converged = report.off_diagonal_norm <= report.threshold;

  result.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.values[i] = a(i, i);
  std::sort(result.values.begin(), result.values.end(), std::greater<>());
  return result;
}

}  // namespace qspectra
