#include "qspectra/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qspectra {

namespace {

struct ScaleSetting {
  double value = 1.0;
  bool invalid = false;
};

ScaleSetting read_scale() {
  ScaleSetting s;
  const char* raw = std::getenv("QSPECTRA_TOL");
  if (raw == nullptr || *raw == '\0') return s;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    s.invalid = true;
    return s;
  }
  s.value = v;
  return s;
}

const ScaleSetting& setting() {
  static const ScaleSetting s = read_scale();
  return s;
}

}  // namespace

double tolerance_scale() { return setting().value; }
bool tolerance_env_invalid() { return setting().invalid; }

}  // namespace qspectra
