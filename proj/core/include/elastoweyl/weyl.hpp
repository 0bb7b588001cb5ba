#pragma once

#include <utility>

#include "elastoweyl/material.hpp"

namespace elastoweyl {

enum class BMethod { quadrature, closed_form_odd };

// Two-term high-frequency asymptotics of the eigenvalue counting function
// of the linear elasticity operator on a d-dimensional domain:
//   N(L) = a Vol_d(Omega) L^{d/2} + b Vol_{d-1}(bdry) L^{(d-1)/2} + o(...)
// with b = b_dir or b_free according to the boundary condition.  The
// *_heat fields are the corresponding heat-trace normalizations
// (multiplication by Gamma(1 + d/2), resp. Gamma(1 + (d-1)/2)).
struct WeylCoefficients {
  double a = 0.0;
  double b_dir = 0.0;
  double b_free = 0.0;
  double a_heat = 0.0;
  double b_dir_heat = 0.0;
  double b_free_heat = 0.0;
  double b_dir_liu = 0.0;  // one-wave surrogate, for falsification runs
  BMethod method = BMethod::quadrature;
};

// Gamma(n/2) for integer n >= 1, by the recurrence from Gamma(1/2) =
// sqrt(pi) and Gamma(1) = 1.  Every Gamma in this library has a
// half-integer argument, so no general-purpose implementation is needed.
double gamma_half_integer(int twice_x);

// Bulk (Weyl) coefficient: one pressure wave and d-1 shear waves,
//   a = [ (d-1)/mu^{d/2} + 1/(lambda+2mu)^{d/2} ] / ((4pi)^{d/2} Gamma(1+d/2)).
double weyl_a(const Material& m);

// Boundary coefficient via adaptive quadrature of the branch-shift
// integral (substituted to t = tau^{-2}; the free-boundary integrand is
// additionally split at t = 2 when that point is interior).  Works for
// every dimension >= 2.  b_dir < 0 < b_free always.
double weyl_b(const Material& m, Boundary bc, double tol = 1e-10);

// Closed-form boundary coefficient in odd dimensions d = 2k+1: the
// quadrature collapses to the k-th Taylor coefficient of an algebraic
// generating function, extracted with exact truncated-series arithmetic.
// Throws std::invalid_argument for even d.
double weyl_b_odd(const Material& m, Boundary bc);

// Published polynomial forms of weyl_b_odd for d in {3, 5, 7, 9}, kept as
// an independent regression surface.  Throws for other dimensions.
double weyl_b_table(const Material& m, Boundary bc);

// Dirichlet boundary coefficient of the scalar-surrogate prediction
// (each wave treated as an independent scalar): the integral term of
// weyl_b is dropped.  Used to demonstrate that the full prediction is
// measurably better.
double weyl_b_liu(const Material& m);

// Residue identity behind the odd-dimensional collapse, evaluated
// independently on both sides: first = scaled quadrature of the branch
// integral against t^{-(k+1)}, second = Taylor-coefficient expression.
// They must agree to quadrature accuracy for every k >= 1, alpha in
// (0, 1) (free side: alpha != 1/2 exactly).
std::pair<double, double> oddform_identity_check(int k, double alpha,
                                                 Boundary bc,
                                                 double tol = 1e-10);

// Full coefficient set; b by quadrature (any d) or closed form (odd d).
WeylCoefficients weyl_coefficients(const Material& m, double tol = 1e-10);
WeylCoefficients weyl_coefficients_odd(const Material& m);

}  // namespace elastoweyl
