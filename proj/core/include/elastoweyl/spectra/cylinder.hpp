#pragma once

#include <cstdint>

#include "elastoweyl/material.hpp"
#include "elastoweyl/spectra/counting.hpp"

namespace elastoweyl {

// Number of lattice points (k1, k2) in Z^2 with k1^2 + k2^2 = K: the
// horizontal multiplicity of every mode family of the flat cylinder
// T^2 x [0, h] with side length 2 pi.
std::int64_t sum_two_squares(std::int64_t K);

struct CylinderSecular {
  double sh = 0.0;    // horizontal-shear block (1-D)
  double lamb = 0.0;  // coupled pressure/vertical-shear block (4x4),
                      // column-normalized; NaN at K = 0 (block decouples)
};

// Secular determinants of the cylinder at horizontal wavenumber square K
// and spectral parameter L, with nu_p = L/(lambda+2mu) - K and
// nu_s = L/mu - K:
//   SH Dirichlet: S(h; nu_s)          roots L = mu (K + (m pi/h)^2), m >= 1
//   SH free:      -nu_s S(h; nu_s)    same with m >= 0
// where S(z; nu) is sin(sqrt(nu) z)/sqrt(nu) continued through nu <= 0.
// The Lamb block couples the compressional and vertical-shear potentials
// through the boundary rows; by the mid-plane symmetry its determinant
// factors into a symmetric and an antisymmetric half-width block (for the
// free boundary these are the two classical plate dispersion relations),
// each evaluated in a rescaled form that keeps evanescent branches
// (nu < 0) O(1) without moving any root.
CylinderSecular cylinder_secular(const Material& m, Boundary bc, double h,
                                 double K, double lambda_val);

struct CylinderScanOptions {
  double lambda_max = 500.0;
  double grid_factor = 8.0;  // step = mu (pi/h)^2 / grid_factor
  double residual_tol = 1e-9;
  bool parallel = true;
};

// Full spectrum of T^2 x [0, h] (d = 3) up to lambda_max.  For each K with
// sum_two_squares(K) > 0 the SH and Lamb determinants are scanned and the
// roots weighted by the lattice multiplicity; K = 0 contributes the
// closed-form rod/shear families, and the free problem adds the three
// rigid translations at L = 0.  The free K range extends to
// lambda_max / (mu gamma_r^2): the lowest Lamb branch approaches the
// Rayleigh line from below, so modes exist where mu K > lambda_max.
// Branch labels are "K=<K>:sh", "K=<K>:lamb", "K=0:axial", "rigid".
CountingFunction cylinder_spectrum(const Material& m, Boundary bc, double h,
                                   const CylinderScanOptions& options = {});

}  // namespace elastoweyl
