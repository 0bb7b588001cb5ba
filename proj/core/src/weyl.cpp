#include "elastoweyl/weyl.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "elastoweyl/numerics/power_series.hpp"
#include "elastoweyl/numerics/quadrature.hpp"
#include "elastoweyl/rayleigh.hpp"

namespace elastoweyl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// mu^{(1-d)/2} / (2^{d+1} pi^{(d-1)/2} Gamma((d+1)/2)): the magnitude
// common to b_dir, b_free and the scalar surrogate.
double b_prefactor(const Material& m) {
  const int d = m.dim();
  return std::pow(m.mu(), 0.5 * (1 - d)) /
         (std::pow(2.0, d + 1) * std::pow(kPi, 0.5 * (d - 1)) *
          gamma_half_integer(d + 1));
}

// Dirichlet branch integrand after t = tau^{-2}:
//   arctan(sqrt((1 - alpha t)(t - 1))) on (1, 1/alpha).
double dir_integrand(double alpha, double t) {
  const double rad = (1.0 - alpha * t) * (t - 1.0);
  return std::atan(std::sqrt(std::max(rad, 0.0)));
}

// Free branch integrand: arctan((t-2)^2 / (4 sqrt((1-alpha t)(t-1)))).
// The radicand vanishes at both endpoints, where the value tends to pi/2
// unless t = 2 is itself an endpoint (alpha = 1/2), where it tends to 0.
double free_integrand(double alpha, double t) {
  const double rad = (1.0 - alpha * t) * (t - 1.0);
  const double num = (t - 2.0) * (t - 2.0);
  if (rad <= 0.0) return num == 0.0 ? 0.0 : 0.5 * kPi;
  return std::atan(0.25 * num / std::sqrt(rad));
}

// Integral of weight(t) * integrand over (1, 1/alpha), split at t = 2
// whenever that point is interior (alpha < 1/2).
template <typename F>
double branch_integral(double alpha, bool free_bc, F weight, double tol) {
  const double t_hi = 1.0 / alpha;
  auto f = [&](double t) {
    const double base =
        free_bc ? free_integrand(alpha, t) : dir_integrand(alpha, t);
    return weight(t) * base;
  };
  if (free_bc && t_hi > 2.0) {
    return quad(f, 1.0, 2.0, 0.5 * tol).value +
           quad(f, 2.0, t_hi, 0.5 * tol).value;
  }
  return quad(f, 1.0, t_hi, tol).value;
}

// k-th Taylor coefficient at t = 0 of the Dirichlet generating function
//   G(t) = (2t - c)/(t - c) / sqrt((1 - alpha t)(1 - t)),  c = (alpha+1)/alpha.
double dir_taylor_coefficient(int k, double alpha) {
  const std::size_t n = static_cast<std::size_t>(k);
  const double c = (alpha + 1.0) / alpha;
  const PowerSeries num = PowerSeries::linear(-c, 2.0, n);
  const PowerSeries den = PowerSeries::linear(-c, 1.0, n);
  const PowerSeries root = ps_sqrt(ps_mul(PowerSeries::linear(1.0, -alpha, n),
                                          PowerSeries::linear(1.0, -1.0, n)));
  return ps_div(ps_div(num, den), root)[n];
}

// k-th Taylor coefficient at t = 0 of the free generating function
//   H(t) = P(t) (4 S(t) + (t-2)^2) / ((t-2) R_alpha(t) S(t)),
// with P(t) = 2 alpha t^2 + (alpha-3) t + 2(1-alpha), S = sqrt((1-at)(1-t))
// and R_alpha the Rayleigh cubic.
double free_taylor_coefficient(int k, double alpha) {
  const std::size_t n = static_cast<std::size_t>(k);
  auto poly = [&](std::vector<double> coeffs) {
    PowerSeries s(n);
    for (std::size_t i = 0; i < coeffs.size() && i <= n; ++i) s[i] = coeffs[i];
    return s;
  };
  const PowerSeries p = poly({2.0 * (1.0 - alpha), alpha - 3.0, 2.0 * alpha});
  const PowerSeries r =
      poly({16.0 * (alpha - 1.0), 8.0 * (3.0 - 2.0 * alpha), -8.0, 1.0});
  const PowerSeries s = ps_sqrt(ps_mul(PowerSeries::linear(1.0, -alpha, n),
                                       PowerSeries::linear(1.0, -1.0, n)));
  const PowerSeries q = s * 4.0 + poly({4.0, -4.0, 1.0});
  const PowerSeries den =
      ps_mul(PowerSeries::linear(-2.0, 1.0, n), ps_mul(r, s));
  return ps_div(ps_mul(p, q), den)[n];
}

int odd_k(const Material& m) {
  const int d = m.dim();
  if (d % 2 == 0)
    throw std::invalid_argument(
        "weyl_b_odd: closed form exists only in odd dimensions");
  return (d - 1) / 2;
}

}  // namespace

double gamma_half_integer(int twice_x) {
  if (twice_x < 1)
    throw std::invalid_argument("gamma_half_integer: argument must be >= 1/2");
  double g = (twice_x % 2 == 0) ? 1.0 : std::sqrt(kPi);  // Gamma(1) or (1/2)
  for (int n = twice_x % 2 == 0 ? 2 : 1; n + 2 <= twice_x; n += 2)
    g *= 0.5 * n;  // Gamma(x+1) = x Gamma(x)
  return g;
}

double weyl_a(const Material& m) {
  const int d = m.dim();
  const double half_d = 0.5 * d;
  return ((d - 1) / std::pow(m.mu(), half_d) +
          1.0 / std::pow(m.lambda() + 2.0 * m.mu(), half_d)) /
         (std::pow(4.0 * kPi, half_d) * gamma_half_integer(d + 2));
}

double weyl_b(const Material& m, Boundary bc, double tol) {
  const int d = m.dim();
  const double alpha = m.alpha();
  const double integral = branch_integral(
      alpha, bc == Boundary::free_boundary,
      [d](double t) { return std::pow(t, -0.5 * (d + 1)); }, tol);
  const double shared = std::pow(alpha, 0.5 * (d - 1));
  if (bc == Boundary::dirichlet) {
    const double bracket =
        (2.0 * (d - 1) / kPi) * integral + shared + (d - 1);
    return -b_prefactor(m) * bracket;
  }
  const double gamma_r = rayleigh_roots(alpha).gamma_r;
  const double bracket = (2.0 * (d - 1) / kPi) * integral + shared + (d - 5) +
                         4.0 * std::pow(gamma_r, 1 - d);
  return b_prefactor(m) * bracket;
}

double weyl_b_odd(const Material& m, Boundary bc) {
  const int k = odd_k(m);
  const double alpha = m.alpha();
  const double scale =
      std::pow(m.mu(), -k) / (std::pow(2.0, 2 * k + 2) * factorial(k) *
                              std::pow(kPi, k));
  if (bc == Boundary::dirichlet) {
    const double bracket = 2.0 * dir_taylor_coefficient(k, alpha) -
                           2.0 * std::pow(alpha / (alpha + 1.0), k) +
                           std::pow(alpha, k) + 2.0 * k;
    return -scale * bracket;
  }
  const double bracket = -8.0 * free_taylor_coefficient(k, alpha) -
                         std::pow(alpha, k) +
                         2.0 * (k + std::pow(2.0, 2 - k) - 1.0);
  return scale * bracket;
}

double weyl_b_table(const Material& m, Boundary bc) {
  const int d = m.dim();
  const double alpha = m.alpha();
  struct Row {
    int d;
    std::vector<double> num;  // ascending powers of alpha
    double den_scale;         // times pi^k (alpha+1)^k resp. (1-alpha)^k
  };
  static const std::vector<Row> dir_rows = {
      {3, {3, 1, 2}, 16},
      {5, {19, 36, 6, 12, 7}, 512},
      {7, {53, 156, 147, 16, 27, 36, 13}, 12288},
      {9, {547, 2168, 3188, 1992, 146, 200, 500, 376, 99}, 1572864},
  };
  static const std::vector<Row> free_rows = {
      {3, {3, -3, 2}, 16},
      {5, {21, -36, 14, 12, -7}, 512},
      {7, {62, -168, 159, -56, 30, -36, 13}, 12288},
      {9, {661, -2440, 3468, -2200, 470, 296, -516, 376, -99}, 1572864},
  };
  const bool dir = bc == Boundary::dirichlet;
  const auto& rows = dir ? dir_rows : free_rows;
  for (const auto& row : rows) {
    if (row.d != d) continue;
    const int k = (d - 1) / 2;
    double num = 0.0;
    for (std::size_t i = row.num.size(); i-- > 0;)
      num = num * alpha + row.num[i];
    const double base = dir ? alpha + 1.0 : 1.0 - alpha;
    const double den =
        row.den_scale * std::pow(kPi, k) * std::pow(base, k);
    const double value = std::pow(m.mu(), -k) * num / den;
    return dir ? -value : value;
  }
  throw std::invalid_argument(
      "weyl_b_table: tabulated forms cover d in {3, 5, 7, 9} only");
}

double weyl_b_liu(const Material& m) {
  const int d = m.dim();
  return -b_prefactor(m) * (std::pow(m.alpha(), 0.5 * (d - 1)) + (d - 1));
}

std::pair<double, double> oddform_identity_check(int k, double alpha,
                                                 Boundary bc, double tol) {
  if (k < 1)
    throw std::invalid_argument("oddform_identity_check: k must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument(
        "oddform_identity_check: alpha must lie in (0, 1)");
  auto weight = [k](double t) { return std::pow(t, -(k + 1.0)); };
  if (bc == Boundary::dirichlet) {
    const double lhs =
        (2.0 * k / kPi) * branch_integral(alpha, false, weight, tol);
    const double rhs = dir_taylor_coefficient(k, alpha) -
                       std::pow(alpha / (alpha + 1.0), k);
    return {lhs, rhs};
  }
  const double lhs =
      (4.0 * k / kPi) * branch_integral(alpha, true, weight, tol);
  const double gamma_r = rayleigh_roots(alpha).gamma_r;
  const double rhs = -8.0 * free_taylor_coefficient(k, alpha) +
                     std::pow(2.0, 3 - k) +
                     2.0 * (1.0 - std::pow(alpha, k)) -
                     4.0 * std::pow(gamma_r, -2 * k);
  return {lhs, rhs};
}

namespace {
WeylCoefficients fill(const Material& m, double b_dir, double b_free,
                      BMethod method) {
  WeylCoefficients w;
  w.a = weyl_a(m);
  w.b_dir = b_dir;
  w.b_free = b_free;
  const int d = m.dim();
  w.a_heat = gamma_half_integer(d + 2) * w.a;
  w.b_dir_heat = gamma_half_integer(d + 1) * w.b_dir;
  w.b_free_heat = gamma_half_integer(d + 1) * w.b_free;
  w.b_dir_liu = weyl_b_liu(m);
  w.method = method;
  return w;
}
}  // namespace

WeylCoefficients weyl_coefficients(const Material& m, double tol) {
  return fill(m, weyl_b(m, Boundary::dirichlet, tol),
              weyl_b(m, Boundary::free_boundary, tol), BMethod::quadrature);
}

WeylCoefficients weyl_coefficients_odd(const Material& m) {
  return fill(m, weyl_b_odd(m, Boundary::dirichlet),
              weyl_b_odd(m, Boundary::free_boundary),
              BMethod::closed_form_odd);
}

}  // namespace elastoweyl
