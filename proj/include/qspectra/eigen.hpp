#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qspectra {

class EigenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major square matrix of doubles, intended to hold a symmetric one.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  SymmetricMatrix(std::size_t n, std::vector<double> row_major);

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct EigenSolveReport {
  int sweeps = 0;
  int rotations = 0;
  bool converged = false;
  double frobenius_norm = 0.0;
  double off_diagonal_norm = 0.0;  // at termination
  double threshold = 0.0;          // relative stopping threshold times the matrix norm
  // Each returned eigenvalue is within this distance of a true eigenvalue
  // (Weyl's inequality applied to the discarded off-diagonal part).
  double eigenvalue_error_bound() const { return off_diagonal_norm; }
};

struct EigenResult {
  std::vector<double> values;  // descending
  EigenSolveReport report;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Rotations sweep the strict upper triangle row by row, so the result is
/// deterministic for a given input and kernel set. Iteration stops once the
/// off-diagonal Frobenius norm is at most 1e-12 times the matrix norm, or
/// after 50 sweeps with `converged = false`.
///
/// Throws EigenError for non-finite entries or entries asymmetric beyond
/// 1e-12 relative to the matrix norm.
EigenResult symmetric_eigenvalues(SymmetricMatrix matrix);

}  // namespace qspectra
