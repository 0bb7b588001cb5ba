#pragma once

#include "elastoweyl/material.hpp"
#include "elastoweyl/spectra/counting.hpp"

namespace elastoweyl {

// Secular determinant of the unit disk (d = 2) at angular index k >= 0,
// in terms of A = sqrt(L/(lambda+2mu)) and B = sqrt(L/mu):
//
//   Dirichlet, k = 0:   J_1(A) J_1(B)            (radial x torsional)
//   Dirichlet, k >= 1:  k^2 J_k(A) J_k(B) - A B J_k'(A) J_k'(B)
//   free:               [(B^2-2k^2) J_k(A) + 2A J_k'(A)] *
//                       [(B^2-2k^2) J_k(B) + 2B J_k'(B)]
//                       - 4k^2 (A J_k'(A) - J_k(A)) (B J_k'(B) - J_k(B))
//
// The eigenvalues of angular index k are exactly the positive roots, with
// multiplicity 1 for k = 0 and 2 for k >= 1; the free problem has in
// addition the rigid modes at L = 0 (two translations in k = 1, one
// rotation in k = 0), total multiplicity 3.
double disk_secular(const Material& m, Boundary bc, int k, double lambda_val);

struct DiskScanOptions {
  double lambda_max = 2000.0;
  // Scan step = (estimated local per-branch root spacing) / grid_factor.
  double grid_factor = 10.0;
  double residual_tol = 1e-9;  // tangential-root classification threshold
  bool parallel = true;
};

// Full spectrum of the unit disk up to lambda_max: every angular branch is
// scanned (sign changes + tangential screening of the normalized secular
// determinant), branches are exhausted when two consecutive ones are
// empty, and rigid modes are added for the free problem.  Branch labels
// are "k=<k>" ("rigid" for the zero modes); suspect (tangential) roots
// count twice and leave a note.
CountingFunction disk_spectrum(const Material& m, Boundary bc,
                               const DiskScanOptions& options = {});

}  // namespace elastoweyl
