#pragma once

#include <utility>

namespace elastoweyl {

// Bessel function of the first kind J_n(x), integer order n >= 0, x >= 0.
//
// Small arguments (x^2 <= 2(n+1), where the ascending series has no term
// growth and hence no cancellation) use the ascending series; everything
// else uses backward (Miller) recurrence normalized by the Neumann sum
// J_0(x) + 2*sum_{k>=1} J_{2k}(x) = 1.
//
// Relative accuracy is ~1e-12 over the supported range; arguments with
// x > 1e6 are rejected (std::domain_error) since the oscillation phase
// can no longer be resolved to the promised accuracy in double precision.
double bessel_j(int n, double x);

// (J_n(x), J_{n+1}(x)) from a single recurrence pass.  The secular
// determinants need consecutive orders at the same argument; computing
// them together keeps them mutually consistent to machine precision.
std::pair<double, double> bessel_j_pair(int n, double x);

// First derivative via J_n'(x) = (n/x) J_n(x) - J_{n+1}(x)  (x > 0).
double bessel_j_prime(int n, double x);

}  // namespace elastoweyl
