#include "elastoweyl/spectra/disk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elastoweyl/numerics/bessel.hpp"
#include "elastoweyl/numerics/root_scan.hpp"
#include "elastoweyl/rayleigh.hpp"
#include "internal_util.hpp"

namespace elastoweyl {
namespace {

struct Jk {
  double j = 0.0;    // J_k(x)
  double jp = 0.0;   // J_k'(x)
  double env = 0.0;  // |J_k(x)| + |J_{k+1}(x)| + tiny: local amplitude scale
};

Jk eval_jk(int k, double x) {
  const auto [jk, jk1] = bessel_j_pair(k, x);
  Jk e;
  e.j = jk;
  e.jp = (x > 0.0) ? (k / x) * jk - jk1 : (k == 1 ? 0.5 : 0.0);
  e.env = std::abs(jk) + std::abs(jk1) + 1e-280;
  return e;
}

double dir_det(int k, double A, double B, const Jk& a, const Jk& b) {
  // J_1 = -J_0', so the k = 0 product of the two scalar factors is jp*jp.
  if (k == 0) return a.jp * b.jp;
  return static_cast<double>(k) * k * a.j * b.j - A * B * a.jp * b.jp;
}

double free_det(int k, double A, double B, const Jk& a, const Jk& b) {
  const double q = B * B - 2.0 * static_cast<double>(k) * k;
  const double la = q * a.j + 2.0 * A * a.jp;
  const double lb = q * b.j + 2.0 * B * b.jp;
  const double ma = A * a.jp - a.j;
  const double mb = B * b.jp - b.j;
  return la * lb - 4.0 * static_cast<double>(k) * k * ma * mb;
}

// Secular determinant divided by a positive, root-free envelope so the
// scanned function stays O(1) along the whole branch; the sign (hence the
// root set) is unchanged.
double scaled_det(const Material& m, Boundary bc, int k, double lambda_val) {
  const double A = std::sqrt(lambda_val / (m.lambda() + 2.0 * m.mu()));
  const double B = std::sqrt(lambda_val / m.mu());
  const Jk a = eval_jk(k, A);
  const Jk b = eval_jk(k, B);
  if (bc == Boundary::dirichlet) {
    const double scale = a.env * b.env * (static_cast<double>(k) * k + A * B + 1.0);
    return dir_det(k, A, B, a, b) / scale;
  }
  const double u = B * B + 2.0 * static_cast<double>(k) * k + 2.0 * B + 1.0;
  return free_det(k, A, B, a, b) / (a.env * b.env * u * u);
}

struct BranchScan {
  std::vector<Root> roots;
  std::vector<std::string> notes;
};

std::string format_note(const char* fmt, int k, double x) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, k, x);
  return buf;
}

// Lower edge of the scan window for angular index k.  Free-boundary
// eigenvalues of index k sit above the Rayleigh line mu*gamma_r^2*k^2
// (whispering-gallery regime) and Dirichlet ones above the free ones, so
// half that line is a safe floor; small k scan from (almost) zero.
double branch_lower_edge(const Material& m, double w1, int k) {
  if (k <= 8) return 1e-3 * m.mu();
  return 0.5 * m.mu() * w1 * static_cast<double>(k) * k;
}

BranchScan scan_branch(const Material& m, Boundary bc, int k,
                       const DiskScanOptions& opt, double w1) {
  BranchScan out;
  const double lo_edge = branch_lower_edge(m, w1, k);
  if (lo_edge >= opt.lambda_max) return out;
  const auto f = [&](double L) { return scaled_det(m, bc, k, L); };
  // Mean root spacing along a branch at L is ~ 2*pi*sqrt(L) / s_sum (one
  // root per half-period of each oscillatory factor); scan each dyadic
  // segment with that spacing evaluated at its lower end, grid_factor
  // points per expected spacing.
  const double s_sum =
      1.0 / std::sqrt(m.mu()) + 1.0 / std::sqrt(m.lambda() + 2.0 * m.mu());
  double last_x = -1.0;
  double last_res = 0.0;
  double lo = lo_edge;
  while (lo < opt.lambda_max) {
    double hi = std::min(opt.lambda_max, 2.0 * lo);
    if (opt.lambda_max - hi < 1e-6 * opt.lambda_max) hi = opt.lambda_max;
    double step = 2.0 * M_PI * std::sqrt(lo) / (s_sum * opt.grid_factor);
    step = std::min(step, (hi - lo) / 4.0);
    RootScan scan = scan_roots(f, lo, hi, step, opt.residual_tol);
    for (const auto& r : scan.roots) {
      if (last_x >= 0.0 &&
          r.x - last_x <= std::max(scan.resolution, last_res)) {
        continue;  // same root straddling a segment boundary
      }
      out.roots.push_back(r);
      last_x = r.x;
      last_res = scan.resolution;
    }
    for (auto& n : scan.notes)
      out.notes.push_back("k=" + std::to_string(k) + ": " + n);
    lo = hi;
  }
  return out;
}

}  // namespace

double disk_secular(const Material& m, Boundary bc, int k, double lambda_val) {
  if (m.dim() != 2)
    throw std::invalid_argument("disk_secular: material must have dim == 2");
  if (k < 0) throw std::invalid_argument("disk_secular: k must be >= 0");
  if (lambda_val < 0.0)
    throw std::invalid_argument("disk_secular: lambda_val must be >= 0");
  const double A = std::sqrt(lambda_val / (m.lambda() + 2.0 * m.mu()));
  const double B = std::sqrt(lambda_val / m.mu());
  const Jk a = eval_jk(k, A);
  const Jk b = eval_jk(k, B);
  if (bc == Boundary::dirichlet) {
    if (k == 0) return a.jp * b.jp;  // J_1(A) J_1(B)
    return dir_det(k, A, B, a, b);
  }
  return free_det(k, A, B, a, b);
}

CountingFunction disk_spectrum(const Material& m, Boundary bc,
                               const DiskScanOptions& options) {
  if (m.dim() != 2)
    throw std::invalid_argument("disk_spectrum: material must have dim == 2");
  if (!(options.lambda_max > 0.0))
    throw std::invalid_argument("disk_spectrum: lambda_max must be > 0");
  const double w1 = rayleigh_roots(m.alpha()).w1;

  // Hard branch cap: the scan window of index k is empty once its lower
  // edge passes lambda_max.  Two extra branches prove the tail is empty.
  const int k_hard =
      static_cast<int>(
          std::ceil(std::sqrt(options.lambda_max / (0.5 * m.mu() * w1)))) +
      2;

  std::vector<BranchScan> branches =
      internal::indexed_parallel_map<BranchScan>(
          static_cast<std::size_t>(k_hard) + 1, options.parallel,
          [&](std::size_t k) {
            return scan_branch(m, bc, static_cast<int>(k), options, w1);
          });

  // Confirm the cutoff: the last two scanned branches must be empty (the
  // cap is chosen so they are; extend sequentially if not).
  auto empty_tail = [&] {
    const std::size_t n = branches.size();
    return n >= 2 && branches[n - 1].roots.empty() &&
           branches[n - 2].roots.empty();
  };
  while (!empty_tail()) {
    const int k = static_cast<int>(branches.size());
    branches.push_back(scan_branch(m, bc, k, options, w1));
  }
  int k_last = -1;
  for (std::size_t k = 0; k < branches.size(); ++k)
    if (!branches[k].roots.empty()) k_last = static_cast<int>(k);

  std::vector<EigenvalueEntry> entries;
  std::vector<std::string> notes;
  if (bc == Boundary::free_boundary)
    entries.push_back({0.0, 3, "rigid"});  // two translations + one rotation
  for (std::size_t k = 0; k < branches.size(); ++k) {
    const std::int64_t base_mult = (k == 0) ? 1 : 2;
    const std::string label = "k=" + std::to_string(k);
    for (const auto& r : branches[k].roots) {
      std::int64_t mult = base_mult;
      if (r.tag == RootTag::suspect) {
        mult *= 2;
        notes.push_back(format_note(
            "k=%d: tangential root at L=%.12g counted twice",
            static_cast<int>(k), r.x));
      }
      entries.push_back({r.x, mult, label});
    }
    for (auto& n : branches[k].notes) notes.push_back(std::move(n));
  }
  {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "branches scanned to k=%d; last root-bearing branch k=%d",
                  static_cast<int>(branches.size()) - 1, k_last);
    notes.emplace_back(buf);
  }

  CountingFunction cf(std::move(entries));
  cf.notes = std::move(notes);
  return cf;
}

}  // namespace elastoweyl
