#include "elastoweyl/spectra/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elastoweyl/numerics/root_scan.hpp"
#include "elastoweyl/rayleigh.hpp"
#include "internal_util.hpp"

namespace elastoweyl {
namespace {

// C(z; nu) = cos(sqrt(nu) z) and S(z; nu) = sin(sqrt(nu) z)/sqrt(nu),
// continued through nu <= 0 (cosh/sinh), both entire in nu.  The scaled
// variant multiplies by exp(-sqrt(-nu) z) when nu < 0 so evanescent
// profiles stay O(1); the scale factor is shared by C and S, and every
// determinant below multiplies exactly one factor per wave family, so a
// determinant built from scaled factors is the true determinant times a
// positive function of lambda -- same roots, same signs.
struct Profile {
  double c = 0.0;
  double s = 0.0;
};

Profile profile_raw(double z, double nu) {
  if (nu > 0.0) {
    const double g = std::sqrt(nu);
    return {std::cos(g * z), std::sin(g * z) / g};
  }
  if (nu < 0.0) {
    const double g = std::sqrt(-nu);
    return {std::cosh(g * z), std::sinh(g * z) / g};
  }
  return {1.0, z};
}

Profile profile_scaled(double z, double nu) {
  if (nu >= 0.0) return profile_raw(z, nu);
  const double g = std::sqrt(-nu);
  const double e = std::exp(-2.0 * g * z);
  return {0.5 * (1.0 + e), -std::expm1(-2.0 * g * z) / (2.0 * g)};
}

// Normalized horizontal-shear determinant: roots at nu_s = (m pi / h)^2
// with m >= 1 (Dirichlet) or m >= 0 (free).
double sh_det(const Material& m, Boundary bc, double h, double K, double L) {
  const double nu3 = L / m.mu() - K;
  const Profile p = profile_scaled(h, nu3);
  const double unit = p.s * (std::sqrt(std::abs(nu3)) + 1.0 / (1.0 + h));
  if (bc == Boundary::dirichlet) return unit;
  return -nu3 * unit / (1.0 + std::abs(nu3));
}

// The coupled (compressional + vertical shear) block is symmetric about
// the mid-plane z = h/2, so its 4x4 determinant factors into a symmetric
// and an antisymmetric 2x2 determinant in the half-width a = h/2:
//
//   Dirichlet sym:   K C1 S3 + nu1 S1 C3
//   Dirichlet anti:  K S1 C3 + nu3 S3 C1
//   free sym:        4 K nu1 S1 C3 + (w2 - 2K)^2 S3 C1
//   free anti:       4 K nu3 S3 C1 + (w2 - 2K)^2 S1 C3
//
// with Cj = C(a; nu_j), Sj = S(a; nu_j), w2 = L/mu; the free forms are the
// classical two-sided traction-free plate dispersion relations.  Each is
// returned as (t1 + t2)/(|t1| + |t2| + tiny): same sign and same zeros as
// the raw determinant, but O(1) along the whole branch, which makes the
// tangential-root residual threshold meaningful.
double lamb_det(const Material& m, Boundary bc, bool symmetric, double h,
                double K, double L) {
  const double a = 0.5 * h;
  const double nu1 = L / (m.lambda() + 2.0 * m.mu()) - K;
  const double nu3 = L / m.mu() - K;
  const Profile f1 = profile_scaled(a, nu1);
  const Profile f3 = profile_scaled(a, nu3);
  double t1, t2;
  if (bc == Boundary::dirichlet) {
    if (symmetric) {
      t1 = K * f1.c * f3.s;
      t2 = nu1 * f1.s * f3.c;
    } else {
      t1 = K * f1.s * f3.c;
      t2 = nu3 * f3.s * f1.c;
    }
  } else {
    const double w = L / m.mu() - 2.0 * K;
    if (symmetric) {
      t1 = 4.0 * K * nu1 * f1.s * f3.c;
      t2 = w * w * f3.s * f1.c;
    } else {
      t1 = 4.0 * K * nu3 * f3.s * f1.c;
      t2 = w * w * f1.s * f3.c;
    }
  }
  return (t1 + t2) / (std::abs(t1) + std::abs(t2) + 1e-300);
}

struct BranchScan {
  std::int64_t K = 0;
  std::vector<Root> sh;
  std::vector<Root> lamb;  // symmetric and antisymmetric roots, sorted
  std::vector<std::string> notes;
  bool empty() const { return sh.empty() && lamb.empty(); }
};

// Lower edge of the scan window at horizontal wavenumber square K >= 1.
//
// Dirichlet: the energy form gives L >= mu K outright (the horizontal
// Fourier factor alone contributes K to the Rayleigh quotient).
//
// Free: for large K h^2 every branch lies above the Rayleigh line
// mu gamma_r^2 K, which the lowest (bending) branch approaches from below
// exponentially in sqrt(K) h; for small K h^2 that branch dips toward the
// thin-plate bending regime ~ mu (1-alpha) (K h)^2 K / 3, so the floor is
// scaled down accordingly.  Margins of 3 percent / a factor ~300 cover
// the respective corrections.
double branch_lower_edge(const Material& m, Boundary bc, double h, double w1,
                         std::int64_t K) {
  const double dK = static_cast<double>(K);
  if (bc == Boundary::dirichlet) return 0.999 * m.mu() * dK;
  const double k_small = std::max(25.0, 400.0 / (h * h));
  if (dK <= k_small) {
    const double hk2 = std::min(1.0, h * h * dK * dK);
    return 1e-3 * m.mu() * (1.0 - m.alpha()) * hk2;
  }
  return 0.97 * m.mu() * w1 * dK;
}

BranchScan scan_branch(const Material& m, Boundary bc, double h,
                       std::int64_t K, const CylinderScanOptions& opt,
                       double w1) {
  BranchScan out;
  out.K = K;
  const double lo = branch_lower_edge(m, bc, h, w1, K);
  if (lo >= opt.lambda_max) return out;
  const double pi_over_h = M_PI / h;
  double step = m.mu() * pi_over_h * pi_over_h / opt.grid_factor;
  step = std::min(step, (opt.lambda_max - lo) / 4.0);

  const auto scan = [&](const std::function<double(double)>& f,
                        const char* tag) {
    RootScan s = scan_roots(f, lo, opt.lambda_max, step, opt.residual_tol);
    for (auto& n : s.notes)
      out.notes.push_back("K=" + std::to_string(K) + ":" + tag + ": " + n);
    return std::move(s.roots);
  };
  out.sh = scan([&](double L) { return sh_det(m, bc, h, K, L); }, "sh");
  auto sym = scan(
      [&](double L) { return lamb_det(m, bc, true, h, K, L); }, "lamb");
  auto anti = scan(
      [&](double L) { return lamb_det(m, bc, false, h, K, L); }, "lamb");
  out.lamb.reserve(sym.size() + anti.size());
  std::merge(sym.begin(), sym.end(), anti.begin(), anti.end(),
             std::back_inserter(out.lamb),
             [](const Root& x, const Root& y) { return x.x < y.x; });
  return out;
}

std::string suspect_note(std::int64_t K, const char* block, double x) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "K=%lld:%s: tangential root at L=%.12g counted twice",
                static_cast<long long>(K), block, x);
  return buf;
}

}  // namespace

std::int64_t sum_two_squares(std::int64_t K) {
  if (K < 0)
    throw std::invalid_argument("sum_two_squares: K must be >= 0");
  auto isqrt = [](std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  };
  const std::int64_t s = isqrt(K);
  std::int64_t count = 0;
  for (std::int64_t k1 = -s; k1 <= s; ++k1) {
    const std::int64_t r = K - k1 * k1;
    const std::int64_t t = isqrt(r);
    if (t * t == r) count += (t == 0) ? 1 : 2;
  }
  return count;
}

CylinderSecular cylinder_secular(const Material& m, Boundary bc, double h,
                                 double K, double lambda_val) {
  if (m.dim() != 3)
    throw std::invalid_argument("cylinder_secular: material must have dim == 3");
  if (!(h > 0.0))
    throw std::invalid_argument("cylinder_secular: h must be > 0");
  if (K < 0.0)
    throw std::invalid_argument("cylinder_secular: K must be >= 0");
  CylinderSecular out;
  const double nu3 = lambda_val / m.mu() - K;
  const double s_raw = profile_raw(h, nu3).s;
  out.sh = (bc == Boundary::dirichlet) ? s_raw : -nu3 * s_raw;
  if (K == 0.0) {
    out.lamb = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.lamb = lamb_det(m, bc, true, h, K, lambda_val) *
               lamb_det(m, bc, false, h, K, lambda_val);
  }
  return out;
}

CountingFunction cylinder_spectrum(const Material& m, Boundary bc, double h,
                                   const CylinderScanOptions& options) {
  if (m.dim() != 3)
    throw std::invalid_argument("cylinder_spectrum: material must have dim == 3");
  if (!(h > 0.0))
    throw std::invalid_argument("cylinder_spectrum: h must be > 0");
  if (!(options.lambda_max > 0.0))
    throw std::invalid_argument("cylinder_spectrum: lambda_max must be > 0");
  const double w1 = rayleigh_roots(m.alpha()).w1;

  // Hard cap: a branch is empty once its scan floor passes lambda_max
  // (Dirichlet eigenvalues exceed mu K; free ones exceed the 0.97 Rayleigh
  // floor for all large K).  The trailing branches prove the tail is empty.
  std::int64_t k_hard;
  if (bc == Boundary::dirichlet) {
    k_hard = static_cast<std::int64_t>(
                 std::ceil(options.lambda_max / (0.999 * m.mu()))) +
             2;
  } else {
    k_hard = static_cast<std::int64_t>(
                 std::ceil(options.lambda_max / (0.97 * m.mu() * w1))) +
             2;
  }

  std::vector<std::int64_t> ks;  // K >= 1 with at least one lattice point
  std::vector<std::int64_t> s2k;
  for (std::int64_t K = 1; K <= k_hard; ++K) {
    const std::int64_t r2 = sum_two_squares(K);
    if (r2 > 0) {
      ks.push_back(K);
      s2k.push_back(r2);
    }
  }

  std::vector<BranchScan> branches = internal::indexed_parallel_map<BranchScan>(
      ks.size(), options.parallel, [&](std::size_t i) {
        return scan_branch(m, bc, h, ks[i], options, w1);
      });

  // Require the last three populated-lattice branches to be empty; extend
  // past the cap if the margins ever fail to confirm it.
  auto tail_empty = [&] {
    const std::size_t n = branches.size();
    if (n < 3) return false;
    return branches[n - 1].empty() && branches[n - 2].empty() &&
           branches[n - 3].empty();
  };
  std::int64_t k_next = k_hard;
  while (!tail_empty()) {
    do {
      ++k_next;
    } while (sum_two_squares(k_next) == 0);
    s2k.push_back(sum_two_squares(k_next));
    branches.push_back(scan_branch(m, bc, h, k_next, options, w1));
    ks.push_back(k_next);
  }

  std::vector<EigenvalueEntry> entries;
  std::vector<std::string> notes;
  if (bc == Boundary::free_boundary)
    entries.push_back({0.0, 3, "rigid"});  // three translations

  // K = 0: the block structure degenerates (the horizontal direction is
  // undefined), but the modes are elementary: constant-in-plane profiles
  // with Lame-speed 1-D spectra, shear twice (two horizontal
  // polarizations) and compressional once.
  {
    const double base = (M_PI / h) * (M_PI / h);
    for (int mm = 1;; ++mm) {
      const double v = m.mu() * base * mm * mm;
      if (v > options.lambda_max) break;
      entries.push_back({v, 2, "K=0:axial"});
    }
    for (int mm = 1;; ++mm) {
      const double v = (m.lambda() + 2.0 * m.mu()) * base * mm * mm;
      if (v > options.lambda_max) break;
      entries.push_back({v, 1, "K=0:axial"});
    }
  }

  std::int64_t k_last = -1;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const BranchScan& b = branches[i];
    if (!b.empty()) k_last = b.K;
    const std::int64_t weight = s2k[i];
    const std::string sh_label = "K=" + std::to_string(b.K) + ":sh";
    const std::string lamb_label = "K=" + std::to_string(b.K) + ":lamb";
    for (const auto& r : b.sh) {
      std::int64_t mult = weight;
      if (r.tag == RootTag::suspect) {
        mult *= 2;
        notes.push_back(suspect_note(b.K, "sh", r.x));
      }
      entries.push_back({r.x, mult, sh_label});
    }
    for (const auto& r : b.lamb) {
      std::int64_t mult = weight;
      if (r.tag == RootTag::suspect) {
        mult *= 2;
        notes.push_back(suspect_note(b.K, "lamb", r.x));
      }
      entries.push_back({r.x, mult, lamb_label});
    }
    for (const auto& n : b.notes) notes.push_back(n);
  }
  {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "branches scanned to K=%lld; last root-bearing branch "
                  "K=%lld",
                  static_cast<long long>(ks.empty() ? 0 : ks.back()),
                  static_cast<long long>(k_last));
    notes.emplace_back(buf);
  }

  CountingFunction cf(std::move(entries));
  cf.notes = std::move(notes);
  return cf;
}

}  // namespace elastoweyl
