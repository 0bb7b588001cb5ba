#pragma once

#include <vector>

#include "elastoweyl/material.hpp"

namespace elastoweyl {

struct ShiftEval {
  double value = 0.0;
  bool at_breakpoint = false;  // Lambda hit a branch threshold exactly
};

// Spectral shift function of the model half-space problem at cotangent
// frequency ||xi'|| = xi and spectral parameter Lambda.  Piecewise
// description (thresholds mu g^2 xi^2 < mu xi^2 < (lambda+2mu) xi^2, with
// g = gamma_r present only in the free case):
//
//   Dirichlet:  0  |  -(d-1)/4 - arctan(W)/pi  |  -d/4
//   free:       0  |  1  |  (d-1)/4 + arctan(V)/pi  |  d/4
//
// where W = sqrt((1 - L/((l+2m)x^2))(L/(m x^2) - 1)) and
//       V = (L/(m x^2) - 2)^2 / (4 W).
// Values at a threshold are the limits from above (right-continuity, the
// same convention as the strict counting function), and the evaluation is
// flagged.  Homogeneity: shift(s xi, s^2 Lambda) = shift(xi, Lambda).
ShiftEval shift_dir(const Material& m, double xi, double lambda_val);
ShiftEval shift_free(const Material& m, double xi, double lambda_val);
ShiftEval shift(const Material& m, Boundary bc, double xi, double lambda_val);

// Decomposition into the out-of-plane component (a multiple of the
// indicator of [mu xi^2, oo)) and the 2-D plane problem; their sum is the
// full shift for any dimension d >= 2.
struct ShiftComponents {
  double perp = 0.0;
  double plane = 0.0;
};
ShiftComponents shift_components(const Material& m, Boundary bc, double xi,
                                 double lambda_val);

// Branch thresholds in Lambda for the given xi, ascending.
std::vector<double> shift_breakpoints(const Material& m, Boundary bc,
                                      double xi);

// arg det S of the plane scattering matrix on the continuous spectrum
// (Lambda > mu xi^2; rejected below), with xi = 1:
//   Dirichlet: -2 arctan(W) on (mu, lambda+2mu), 0 above;
//   free:      +2 arctan(V) on (mu, lambda+2mu), 0 above.
// The free phase jumps by -pi at Lambda = lambda+2mu when lambda != 0 (the
// threshold is rigid) and is continuous when lambda = 0 (soft threshold:
// a new bound-state-at-threshold appears and compensates).
double scattering_phase(const Material& m, Boundary bc, double lambda_val);

// arg det S of the out-of-plane (scalar) part: the Dirichlet reflection is
// -1 per each of the d-2 components, the free one is +1.
double scattering_phase_perp(const Material& m, Boundary bc);

// The one bound state of the free plane problem: Lambda_R = mu gamma_r^2
// (below the continuous spectrum), the Rayleigh wave.
double rayleigh_bound_state(const Material& m);

// Boundary coefficient reconstructed from the shift by the radial integral
//   b = Area(S^{d-2})/(2 pi)^{d-1} * int_0^oo shift(r, 1) r^{d-2} dr
// (Area(S^0) = 2), integrated piecewise between the breakpoints.  Must
// agree with weyl_b to quadrature accuracy; this is the cross-check that
// ties the shift functions to the asymptotic coefficients.
double b_from_shift(const Material& m, Boundary bc, double tol = 1e-10);

}  // namespace elastoweyl
