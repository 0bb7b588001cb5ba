#pragma once

#include <functional>
#include <string>
#include <vector>

namespace elastoweyl {

enum class RootTag {
  simple,   // isolated sign change, refined by bisection
  suspect,  // local |f| minimum below the residual tolerance with no sign
            // change: an even-multiplicity (tangential) zero, or a pair of
            // roots closer than double precision can separate
};

struct Root {
  double x = 0.0;
  double residual = 0.0;  // f at the returned abscissa
  RootTag tag = RootTag::simple;
};

struct RootScan {
  std::vector<Root> roots;          // sorted by x
  double resolution = 0.0;          // roots closer than this are merged
  std::vector<std::string> notes;   // ambiguities, never silently dropped
};

// Scans f on [a, b] with the given grid step.  Every sign change is
// bracketed and refined by bisection until the bracket is narrower than
// max(1e-12, 4 ulp).  Grid dips (local minima of f against the sign of the
// surrounding samples) whose interpolated depth makes a crossing plausible
// are refined by golden-section search: if a crossing is exposed, both
// roots are recovered; if |f| at the minimum is below residual_tol the
// point is reported once with tag 'suspect' (two coincident roots as far
// as double precision is concerned); otherwise there is no root.
//
// Guarantees: every sign change of f whose roots are separated by more
// than 2*step is found, and no two returned roots are closer than the
// reported resolution.
RootScan scan_roots(const std::function<double(double)>& f, double a, double b,
                    double step, double residual_tol);

}  // namespace elastoweyl
