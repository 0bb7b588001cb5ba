#include "elastoweyl/numerics/root_scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elastoweyl {

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo, double fhi) {
  // Preserves flo * fhi < 0.  Refines to max(1e-12, a few ulps).
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double tol =
        std::max(1e-12, 4.0 * std::abs(mid) * 2.220446049250313e-16);
    if (hi - lo <= tol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) != (fm < 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimization of sgn * f (so that "down" is toward a
// possible crossing).  Returns the abscissa of the refined minimum.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double sgn) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = sgn * f(x1), f2 = sgn * f(x2);
  for (int it = 0; it < 120 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo));
       ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = sgn * f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = sgn * f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RootScan scan_roots(const std::function<double(double)>& f, double a, double b,
                    double step, double residual_tol) {
  if (!(step > 0.0)) throw std::invalid_argument("scan_roots: step must be > 0");
  if (!(b > a)) throw std::invalid_argument("scan_roots: need b > a");

  RootScan scan;
  scan.resolution = std::max(1e-9, 1e-6 * step);

  std::vector<double> xs, fs;
  for (std::size_t i = 0;; ++i) {
    const double x = a + static_cast<double>(i) * step;
    if (x >= b) {
      xs.push_back(b);
      fs.push_back(f(b));
      break;
    }
    xs.push_back(x);
    fs.push_back(f(x));
  }

  auto push_root = [&](double x, double fx, RootTag tag) {
    if (!scan.roots.empty() &&
        std::abs(x - scan.roots.back().x) < scan.resolution) {
      if (tag == RootTag::suspect) scan.roots.back().tag = RootTag::suspect;
      return;
    }
    scan.roots.push_back({x, fx, tag});
  };

  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double fl = fs[i], fr = fs[i + 1];
    if (fl == 0.0) {
      push_root(xs[i], 0.0, RootTag::simple);
      continue;
    }
    if ((fl < 0.0) != (fr < 0.0)) {
      const double x = bisect(f, xs[i], xs[i + 1], fl, fr);
      push_root(x, f(x), RootTag::simple);
      continue;
    }
    // Same sign at both cell edges.  A dip here can hide an even number of
    // roots; screen interior samples that are local minima of sgn*f with a
    // parabolic fit through the three neighbouring values.
    if (i == 0 || i + 1 >= n) continue;
    const double sgn = fl > 0.0 ? 1.0 : -1.0;
    const double g0 = sgn * fs[i - 1], g1 = sgn * fs[i], g2 = sgn * fs[i + 1];
    if (!(g1 <= g0 && g1 <= g2)) continue;
    if (g0 <= 0.0 || g2 <= 0.0) continue;  // crossing handled by neighbours
    // Vertex value of the parabola through (x_{i-1},g0),(x_i,g1),(x_{i+1},g2).
    const double denom = g0 - 2.0 * g1 + g2;
    double vertex = g1;
    if (denom > 0.0) vertex = g1 - 0.125 * (g2 - g0) * (g2 - g0) / denom;
    const double screen = std::max(residual_tol, 0.1 * std::min(g0, g2));
    if (vertex > screen) continue;

    const double xstar = golden_min(f, xs[i - 1], xs[i + 1], sgn);
    const double fstar = f(xstar);
    if (fstar != 0.0 && (fstar < 0.0) != (fl < 0.0)) {
      // The dip crosses after all: two simple roots straddle xstar.
      const double left = bisect(f, xs[i - 1], xstar, fs[i - 1], fstar);
      push_root(left, f(left), RootTag::simple);
      const double right = bisect(f, xstar, xs[i + 1], fstar, fs[i + 1]);
      push_root(right, f(right), RootTag::simple);
      scan.notes.push_back("split near-tangential pair near x=" +
                           std::to_string(xstar));
    } else if (std::abs(fstar) <= residual_tol) {
      push_root(xstar, fstar, RootTag::suspect);
      scan.notes.push_back("tangential zero (suspect multiplicity) at x=" +
                           std::to_string(xstar));
    }
  }
  return scan;
}

}  // namespace elastoweyl
