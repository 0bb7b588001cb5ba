#pragma once

#include <functional>

namespace elastoweyl {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive integration of f over the finite interval (a, b) by the
// tanh-sinh (double-exponential) transformation
//     x = (a+b)/2 + (b-a)/2 * tanh((pi/2) sinh(t)),
// refined by halving the step in t until two successive levels agree to
// the requested tolerance.  Nodes cluster double-exponentially at the
// endpoints, so integrable endpoint singularities -- in particular the
// arctan-of-square-root behaviour of the boundary-coefficient integrands,
// whose derivatives blow up like 1/sqrt(distance) -- cost nothing extra.
// f is never evaluated at a or b themselves.
//
// Throws std::runtime_error if the refinement budget is exhausted before
// the error estimate drops below max(tol, a few ulps of the result).
QuadResult quad(const std::function<double(double)>& f, double a, double b,
                double tol);

// Same, but returns the best estimate with converged=false instead of
// throwing when the budget runs out.
QuadResult quad_no_throw(const std::function<double(double)>& f, double a,
                         double b, double tol);

}  // namespace elastoweyl
