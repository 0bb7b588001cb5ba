#include "elastoweyl/numerics/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elastoweyl {

namespace {

void check_args(int n, double x) {
  if (n < 0) throw std::domain_error("bessel_j: order must be >= 0");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j: argument must be >= 0");
  if (x > 1e6)
    throw std::domain_error("bessel_j: argument " + std::to_string(x) +
                            " exceeds the supported range (1e6)");
}

// Ascending series J_n(x) = (x/2)^n sum_m (-x^2/4)^m / (m! (n+m)!).
// Safe (alternating terms, no growth) whenever x^2/4 <= n+1.
double series_jn(int n, double x) {
  double prefactor = 1.0;  // (x/2)^n / n!
  const double half_x = 0.5 * x;
  for (int k = 1; k <= n; ++k) prefactor *= half_x / k;
  const double q = -half_x * half_x;
  double term = prefactor, sum = prefactor;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<double>(m) * (n + m));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) + 5e-324) break;
  }
  return sum;
}

// Start order for Miller's backward recurrence.  J_m(x) ~ (e x / 2m)^m for
// m above the turning point, so we pick m with
//   (e x / 2m)^m       < 1e-18                    (Neumann-sum truncation)
//   (e x / 2m)^{2m}    < 1e-22 * (2n / e x)^{-2n} (seed contamination at
//                                                  order n, where J_n itself
//                                                  may be exponentially small)
int miller_start_order(int n, double x) {
  const double ex = std::exp(1.0) * x;
  const double extra =
      n > 0 ? std::max(0.0, 2.0 * n * std::log(2.0 * n / ex)) : 0.0;
  int m = std::max(n, static_cast<int>(x)) + 12;
  auto big_enough = [&](int mm) {
    const double l = std::log(2.0 * mm / ex);
    return mm * l >= 42.0 && 2.0 * mm * l >= 51.0 + extra;
  };
  while (!big_enough(m)) ++m;
  return m + (m % 2);
}

// Backward recurrence f_{k-1} = (2k/x) f_k - f_{k+1} from an arbitrary seed,
// normalized afterwards by the Neumann sum J_0 + 2 sum_{k>=1} J_{2k} = 1.
// Returns (J_n, J_{n+1}).
std::pair<double, double> miller_jn_pair(int n, double x) {
  const int m0 = miller_start_order(n + 1, x);
  double f_above = 0.0;   // f_{k+1}
  double f = 1e-100;      // f_k, starting at k = m0
  double jn = 0.0, jn1 = 0.0, neumann = 0.0;
  for (int k = m0;; --k) {
    if (k == n + 1) jn1 = f;
    if (k == n) jn = f;
    if (k == 0) {
      neumann += f;
      break;
    }
    if (k % 2 == 0) neumann += 2.0 * f;
    if (std::abs(f) > 1e250) {
      const double s = 1e-250;
      f *= s;
      f_above *= s;
      jn *= s;
      jn1 *= s;
      neumann *= s;
    }
    const double f_below = (2.0 * k / x) * f - f_above;
    f_above = f;
    f = f_below;
  }
  return {jn / neumann, jn1 / neumann};
}

bool series_regime(int n, double x) { return x * x <= 2.0 * (n + 1); }

}  // namespace

double bessel_j(int n, double x) {
  check_args(n, x);
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (series_regime(n, x)) return series_jn(n, x);
  return miller_jn_pair(n, x).first;
}

std::pair<double, double> bessel_j_pair(int n, double x) {
  check_args(n, x);
  if (x == 0.0) return {n == 0 ? 1.0 : 0.0, 0.0};
  if (series_regime(n + 1, x)) return {series_jn(n, x), series_jn(n + 1, x)};
  return miller_jn_pair(n, x);
}

double bessel_j_prime(int n, double x) {
  check_args(n, x);
  if (x == 0.0) return n == 1 ? 0.5 : 0.0;
  auto [jn, jn1] = bessel_j_pair(n, x);
  return (n / x) * jn - jn1;
}

}  // namespace elastoweyl
