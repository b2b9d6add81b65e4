#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qspectra/simd/kernels.hpp"

namespace qspectra::simd {

namespace {

constexpr KernelTable kScalarTable{&scalar::rotate_pair, &scalar::sum_squares,
                                   &scalar::sum_abs_deviation};
#if defined(QSPECTRA_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::rotate_pair, &avx2::sum_squares, &avx2::sum_abs_deviation};
#endif

Isa select_isa() {
  if (const char* forced = std::getenv("QSPECTRA_SIMD")) {
    const std::string value(forced);
    if (value == "scalar") return Isa::Scalar;
    if (value == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
  }
  return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(QSPECTRA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel set '" + std::string(isa_name(isa)) + "' is unavailable");
  }
#if defined(QSPECTRA_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2Table;
#endif
  return kScalarTable;
}

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

const KernelTable& kernels() {
  static const KernelTable& table = kernels_for(active_isa());
  return table;
}

}  // namespace qspectra::simd
