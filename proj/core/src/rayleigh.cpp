#include "elastoweyl/rayleigh.hpp"

#include <cmath>
#include <stdexcept>

namespace elastoweyl {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("rayleigh: alpha must lie in (0, 1)");
}

template <typename T>
T cubic_impl(double alpha, T w) {
  return ((w - 8.0) * w + 8.0 * (3.0 - 2.0 * alpha)) * w +
         16.0 * (alpha - 1.0);
}

}  // namespace

double rayleigh_cubic(double alpha, double w) { return cubic_impl(alpha, w); }

std::complex<double> rayleigh_cubic(double alpha, std::complex<double> w) {
  return cubic_impl(alpha, w);
}

double rayleigh_secular(double alpha, double w) {
  const double rad = (1.0 - alpha * w) * (1.0 - w);
  if (rad < 0.0)
    throw std::invalid_argument(
        "rayleigh_secular: (1-alpha*w)(1-w) must be >= 0");
  return 4.0 * std::sqrt(rad) - (w - 2.0) * (w - 2.0);
}

RayleighRoots rayleigh_roots(double alpha) {
  check_alpha(alpha);
  // R_alpha(0) = 16(alpha-1) < 0 and R_alpha(1) = 1 for every alpha, so the
  // unique subsonic root is bracketed by (0, 1).
  double lo = 0.0, hi = 1.0;
  double flo = 16.0 * (alpha - 1.0);
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * 2.220446049250313e-16 * mid) break;
    const double fm = rayleigh_cubic(alpha, mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  RayleighRoots r;
  r.w1 = 0.5 * (lo + hi);
  r.gamma_r = std::sqrt(r.w1);

  // Deflation: R_alpha(w) = (w - w1)(w^2 + b w + c) with b = w1 - 8 and
  // c = 16(1 - alpha)/w1 (product of all three roots is 16(1 - alpha)).
  const double b = r.w1 - 8.0;
  const double c = 16.0 * (1.0 - alpha) / r.w1;
  const double disc = b * b - 4.0 * c;
  const double scale = std::max(b * b, std::abs(4.0 * c));
  if (std::abs(disc) < 1e-12 * scale) {
    r.case_tag = CubicCase::double_real;
    r.w2 = r.w3 = std::complex<double>(-0.5 * b, 0.0);
  } else if (disc < 0.0) {
    r.case_tag = CubicCase::complex_pair;
    const double im = 0.5 * std::sqrt(-disc);
    r.w2 = std::complex<double>(-0.5 * b, im);
    r.w3 = std::conj(r.w2);
  } else {
    r.case_tag = CubicCase::distinct_real;
    // b < 0 here, so this is the numerically stable pairing.
    const double big = 0.5 * (-b + std::sqrt(disc));
    r.w2 = std::complex<double>(c / big, 0.0);
    r.w3 = std::complex<double>(big, 0.0);
  }
  return r;
}

double alpha_star() {
  static const double value = [] {
    // 64 a^3 - 107 a^2 + 62 a - 11: negative at 0, positive at 1.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double p = ((64.0 * mid - 107.0) * mid + 62.0) * mid - 11.0;
      if (p < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return value;
}

}  // namespace elastoweyl
