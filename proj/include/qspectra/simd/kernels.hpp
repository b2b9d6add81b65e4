#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops of the eigensolver and energy sums.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled into its own translation unit. The variant is picked once
// per process from CPUID; QSPECTRA_SIMD=scalar forces the reference path.
// Rotation kernels are bit-identical across variants (no FMA contraction);
// reductions differ only in summation order.

namespace qspectra::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  // x' = c*x - s*y, y' = s*x + c*y, elementwise over n entries.
  void (*rotate_pair)(double* x, double* y, std::size_t n, double c, double s);
  double (*sum_squares)(const double* x, std::size_t n);
  // sum_i |x_i - center|
  double (*sum_abs_deviation)(const double* x, std::size_t n, double center);
};

namespace scalar {
void rotate_pair(double* x, double* y, std::size_t n, double c, double s);
double sum_squares(const double* x, std::size_t n);
double sum_abs_deviation(const double* x, std::size_t n, double center);
}  // namespace scalar

#if defined(QSPECTRA_HAVE_AVX2)
namespace avx2 {
void rotate_pair(double* x, double* y, std::size_t n, double c, double s);
double sum_squares(const double* x, std::size_t n);
double sum_abs_deviation(const double* x, std::size_t n, double center);
}  // namespace avx2
#endif

bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

// Throws std::invalid_argument when the ISA is not available on this build/CPU.
const KernelTable& kernels_for(Isa isa);

Isa active_isa();
const KernelTable& kernels();

inline void rotate_pair(std::span<double> x, std::span<double> y, double c, double s) {
  kernels().rotate_pair(x.data(), y.data(), x.size(), c, s);
}
inline double sum_squares(std::span<const double> x) {
  return kernels().sum_squares(x.data(), x.size());
}
inline double sum_abs_deviation(std::span<const double> x, double center) {
  return kernels().sum_abs_deviation(x.data(), x.size(), center);
}

}  // namespace qspectra::simd
