#pragma once

#include <complex>

namespace elastoweyl {

enum class CubicCase {
  complex_pair,   // alpha < alpha_star: w2, w3 form a conjugate pair
  double_real,    // alpha ~ alpha_star: w2 = w3 real
  distinct_real,  // alpha > alpha_star: three distinct real roots
};

// Root data of the Rayleigh cubic
//   R_alpha(w) = w^3 - 8 w^2 + 8 (3 - 2 alpha) w + 16 (alpha - 1),
// whose unique root w1 in (0, 1) determines the Rayleigh wave speed
// c_R = gamma_r * sqrt(mu):  gamma_r = sqrt(w1).
struct RayleighRoots {
  double w1 = 0.0;
  std::complex<double> w2;
  std::complex<double> w3;
  double gamma_r = 0.0;
  CubicCase case_tag = CubicCase::complex_pair;
};

// R_alpha evaluated at real or complex w.
double rayleigh_cubic(double alpha, double w);
std::complex<double> rayleigh_cubic(double alpha, std::complex<double> w);

// Equivalent surface-wave form 4 sqrt((1 - alpha w)(1 - w)) - (w - 2)^2,
// defined for w in [0, 1] (and w <= 1/alpha); it vanishes exactly at w1.
double rayleigh_secular(double alpha, double w);

// All three roots for alpha in (0, 1): w1 by bisection on (0, 1) (where
// R_alpha(0) = 16(alpha-1) < 0 < 1 = R_alpha(1)), then w2, w3 from the
// deflated quadratic.  Throws std::invalid_argument outside (0, 1).
RayleighRoots rayleigh_roots(double alpha);

// Boundary between the complex-pair and distinct-real regimes: the unique
// root in (0, 1) of 64 a^3 - 107 a^2 + 62 a - 11.  (~0.32)
double alpha_star();

}  // namespace elastoweyl
