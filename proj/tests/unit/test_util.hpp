#pragma once

#include <algorithm>
#include <cmath>

// Shared comparison helpers: relative error against the larger magnitude
// (0 when both vanish), and plain absolute error.
inline double rel_err(double got, double want) {
  const double scale = std::max(std::fabs(got), std::fabs(want));
  return scale == 0.0 ? 0.0 : std::fabs(got - want) / scale;
}

inline double abs_err(double got, double want) { return std::fabs(got - want); }
