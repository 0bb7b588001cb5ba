#include "elastoweyl/shift.hpp"

#include <cmath>
#include <stdexcept>

#include "elastoweyl/numerics/quadrature.hpp"
#include "elastoweyl/rayleigh.hpp"
#include "elastoweyl/weyl.hpp"

namespace elastoweyl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_xi(double xi) {
  if (!(xi > 0.0))
    throw std::invalid_argument("shift: xi must be > 0 (use homogeneity)");
}

// arctan argument W of the middle window, at y = Lambda / (mu xi^2) in
// (1, 1/alpha); alpha y = Lambda / ((lambda+2mu) xi^2).
double middle_w(double alpha, double y) {
  const double rad = (1.0 - alpha * y) * (y - 1.0);
  return std::sqrt(std::max(rad, 0.0));
}

double plane_dir(double alpha, double y) {
  // y = Lambda/(mu xi^2); right-continuous at y = 1 and y = 1/alpha.
  if (y < 1.0) return 0.0;
  if (y < 1.0 / alpha) return -0.25 - std::atan(middle_w(alpha, y)) / kPi;
  return -0.5;
}

double plane_free(double alpha, double gamma_sq, double y) {
  if (y < gamma_sq) return 0.0;
  if (y < 1.0) return 1.0;
  if (y < 1.0 / alpha) {
    const double w = middle_w(alpha, y);
    const double num = (y - 2.0) * (y - 2.0);
    const double at =
        w > 0.0 ? std::atan(0.25 * num / w) : (num == 0.0 ? 0.0 : 0.5 * kPi);
    return 0.25 + at / kPi;
  }
  return 0.5;
}

bool hits_breakpoint(const Material& m, Boundary bc, double xi,
                     double lambda_val) {
  for (double t : shift_breakpoints(m, bc, xi))
    if (lambda_val == t) return true;
  return false;
}

}  // namespace

std::vector<double> shift_breakpoints(const Material& m, Boundary bc,
                                      double xi) {
  check_xi(xi);
  const double xi2 = xi * xi;
  std::vector<double> t;
  if (bc == Boundary::free_boundary)
    t.push_back(m.mu() * rayleigh_roots(m.alpha()).w1 * xi2);
  t.push_back(m.mu() * xi2);
  t.push_back((m.lambda() + 2.0 * m.mu()) * xi2);
  return t;
}

ShiftComponents shift_components(const Material& m, Boundary bc, double xi,
                                 double lambda_val) {
  check_xi(xi);
  const double y = lambda_val / (m.mu() * xi * xi);
  const double quarter_perp = 0.25 * (m.dim() - 2);
  ShiftComponents parts;
  if (bc == Boundary::dirichlet) {
    parts.perp = y >= 1.0 ? -quarter_perp : 0.0;
    parts.plane = plane_dir(m.alpha(), y);
  } else {
    parts.perp = y >= 1.0 ? quarter_perp : 0.0;
    parts.plane = plane_free(m.alpha(), rayleigh_roots(m.alpha()).w1, y);
  }
  return parts;
}

ShiftEval shift(const Material& m, Boundary bc, double xi, double lambda_val) {
  const ShiftComponents parts = shift_components(m, bc, xi, lambda_val);
  return {parts.perp + parts.plane, hits_breakpoint(m, bc, xi, lambda_val)};
}

ShiftEval shift_dir(const Material& m, double xi, double lambda_val) {
  return shift(m, Boundary::dirichlet, xi, lambda_val);
}

ShiftEval shift_free(const Material& m, double xi, double lambda_val) {
  return shift(m, Boundary::free_boundary, xi, lambda_val);
}

double scattering_phase(const Material& m, Boundary bc, double lambda_val) {
  const double mu = m.mu();
  if (!(lambda_val > mu))
    throw std::invalid_argument(
        "scattering_phase: Lambda must exceed the continuous-spectrum "
        "threshold mu (at xi = 1)");
  const double y = lambda_val / mu;
  if (y >= 1.0 / m.alpha()) return 0.0;  // second interval: S is unitary 1x1
  const double w = middle_w(m.alpha(), y);
  if (bc == Boundary::dirichlet) return -2.0 * std::atan(w);
  const double num = (y - 2.0) * (y - 2.0);
  const double at =
      w > 0.0 ? std::atan(0.25 * num / w) : (num == 0.0 ? 0.0 : 0.5 * kPi);
  return 2.0 * at;
}

double scattering_phase_perp(const Material& m, Boundary bc) {
  if (bc == Boundary::free_boundary) return 0.0;  // S_perp = +identity
  // S_perp = -identity on d-2 components: phase pi per odd count.
  return (m.dim() - 2) % 2 == 0 ? 0.0 : kPi;
}

double rayleigh_bound_state(const Material& m) {
  return m.mu() * rayleigh_roots(m.alpha()).w1;
}

double b_from_shift(const Material& m, Boundary bc, double tol) {
  const int d = m.dim();
  // Area(S^{d-2}) = 2 pi^{(d-1)/2} / Gamma((d-1)/2); equals 2 when d = 2.
  const double sphere = 2.0 * std::pow(kPi, 0.5 * (d - 1)) /
                        gamma_half_integer(d - 1);
  const double scale = sphere / std::pow(2.0 * kPi, d - 1);

  auto integrand = [&](double r) {
    return shift(m, bc, r, 1.0).value * std::pow(r, d - 2);
  };
  // Breakpoints of r -> shift(r, 1): Lambda = 1 crosses each threshold at
  // r = 1/sqrt(threshold at xi=1).
  std::vector<double> cuts = {0.0};
  const auto thresholds = shift_breakpoints(m, bc, 1.0);
  for (std::size_t i = thresholds.size(); i-- > 0;)
    cuts.push_back(1.0 / std::sqrt(thresholds[i]));
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += quad(integrand, cuts[i], cuts[i + 1], tol).value;
  return scale * total;
}

}  // namespace elastoweyl
