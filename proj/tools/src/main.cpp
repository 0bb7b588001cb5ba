// elastoweyl: two-term Weyl asymptotics of the linear elasticity operator,
// and exactly computed model spectra to verify them against.
//
// Subcommands: coeffs, rayleigh, shift, count.  Output is CSV (12
// significant digits, schema versioned in a '#' header line) or JSON, to
// stdout or --out PATH.  Identical configuration produces byte-identical
// output.  Exit codes: 0 success, 2 configuration error, 3 numerical
// failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elastoweyl/material.hpp"
#include "elastoweyl/rayleigh.hpp"
#include "elastoweyl/shift.hpp"
#include "elastoweyl/spectra/counting.hpp"
#include "elastoweyl/spectra/cylinder.hpp"
#include "elastoweyl/spectra/disk.hpp"
#include "elastoweyl/weyl.hpp"

namespace {

using json = nlohmann::json;
using namespace elastoweyl;

std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// One tabular report: fixed column schema, string cells, trailing notes.
struct Report {
  std::string schema;  // e.g. "coeffs" or "coeffs+liu"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  std::string to_csv() const {
    std::ostringstream out;
    out << "# elastoweyl-csv v1 " << schema << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
    for (const auto& n : notes) out << "# note: " << n << "\n";
    return out.str();
  }

  std::string to_json() const {
    json j;
    j["schema"] = "elastoweyl-json v1 " + schema;
    j["columns"] = columns;
    json jrows = json::array();
    for (const auto& row : rows) jrows.push_back(row);
    j["rows"] = std::move(jrows);
    j["notes"] = notes;
    return j.dump(2) + "\n";
  }
};

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void emit(const Report& report, const OutputOptions& out) {
  const std::string text =
      out.format == "json" ? report.to_json() : report.to_csv();
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out.out_path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + out.out_path);
}

// --dim accepts "3" or a range "2..5".
std::vector<int> parse_dims(const std::string& s) {
  const auto dots = s.find("..");
  auto to_int = [&](const std::string& t) {
    std::size_t pos = 0;
    const int v = std::stoi(t, &pos);
    if (pos != t.size()) throw CLI::ValidationError("--dim", "bad dimension: " + t);
    return v;
  };
  std::vector<int> dims;
  if (dots == std::string::npos) {
    dims.push_back(to_int(s));
  } else {
    const int lo = to_int(s.substr(0, dots));
    const int hi = to_int(s.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--dim", "empty range: " + s);
    for (int d = lo; d <= hi; ++d) dims.push_back(d);
  }
  for (int d : dims)
    if (d < 2) throw CLI::ValidationError("--dim", "dimension must be >= 2");
  return dims;
}

// --alpha-sweep lo:hi:n, n points inclusive.
std::vector<double> parse_sweep(const std::string& s) {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &lo, &hi, &n, &extra) != 3 ||
      n < 1 || !(lo > 0.0) || !(hi < 1.0) || hi < lo ||
      (n == 1 && hi != lo))
    throw CLI::ValidationError("--alpha-sweep",
                               "expected lo:hi:n with 0 < lo <= hi < 1: " + s);
  std::vector<double> alphas(n);
  for (int i = 0; i < n; ++i)
    alphas[i] = (n == 1) ? lo : lo + (hi - lo) * i / (n - 1);
  return alphas;
}

Boundary parse_bc(const std::string& s) {
  if (s == "dir" || s == "dirichlet") return Boundary::dirichlet;
  if (s == "free") return Boundary::free_boundary;
  throw CLI::ValidationError("--bc", "expected dir|free: " + s);
}

// ---------------------------------------------------------------------------
// coeffs

int cmd_coeffs(const std::vector<int>& dims, double lambda, double mu,
               const std::optional<std::string>& sweep, bool liu,
               const OutputOptions& out) {
  Report rep;
  rep.schema = liu ? "coeffs+liu" : "coeffs";
  rep.columns = {"dim",        "lambda",     "mu",          "alpha",
                 "a",          "b_dir",      "b_free",      "a_heat",
                 "b_dir_heat", "b_free_heat", "method",     "closed_form_delta"};
  if (liu) {
    rep.columns.push_back("b_liu");
    rep.columns.push_back("liu_ratio");
  }
  std::vector<Material> mats;
  for (int d : dims) {
    if (sweep) {
      for (double alpha : parse_sweep(*sweep))
        mats.push_back(material_from_alpha(alpha, d));
    } else {
      mats.emplace_back(lambda, mu, d, AdmissibilityMode::extended);
    }
  }
  for (const Material& m : mats) {
    WeylCoefficients c = weyl_coefficients(m);  // quadrature
    std::string method = "quadrature";
    std::string delta;
    if (m.dim() % 2 == 1) {
      // Odd dimension: report the closed forms, plus the agreement delta
      // against the quadrature evaluation.
      const WeylCoefficients q = c;
      c = weyl_coefficients_odd(m);
      method = "closed_form_odd";
      delta = fmt12(std::max(std::fabs(q.b_dir - c.b_dir),
                             std::fabs(q.b_free - c.b_free)));
    }
    std::vector<std::string> row = {
        std::to_string(m.dim()), fmt12(m.lambda()),     fmt12(m.mu()),
        fmt12(m.alpha()),        fmt12(c.a),            fmt12(c.b_dir),
        fmt12(c.b_free),         fmt12(c.a_heat),       fmt12(c.b_dir_heat),
        fmt12(c.b_free_heat),    method,                delta};
    if (liu) {
      row.push_back(fmt12(c.b_dir_liu));
      row.push_back(fmt12(c.b_dir_liu / c.b_dir));
    }
    rep.rows.push_back(std::move(row));
  }
  emit(rep, out);
  return 0;
}

// ---------------------------------------------------------------------------
// rayleigh

int cmd_rayleigh(std::optional<double> alpha, std::optional<double> lambda,
                 std::optional<double> mu, const OutputOptions& out) {
  double a;
  if (alpha) {
    a = *alpha;
  } else if (lambda && mu) {
    a = Material(*lambda, *mu, 2, AdmissibilityMode::extended).alpha();
  } else {
    throw CLI::ValidationError("rayleigh",
                               "pass --alpha or both --lambda and --mu");
  }
  const RayleighRoots r = rayleigh_roots(a);
  const char* tag = r.case_tag == CubicCase::complex_pair   ? "complex_pair"
                    : r.case_tag == CubicCase::double_real  ? "double_real"
                                                            : "distinct_real";
  Report rep;
  rep.schema = "rayleigh";
  rep.columns = {"alpha",          "w1",    "gamma_r", "case",
                 "w2_re",          "w2_im", "w3_re",   "w3_im",
                 "cubic_residual", "secular_residual", "alpha_star"};
  rep.rows.push_back({fmt12(a), fmt12(r.w1), fmt12(r.gamma_r), tag,
                      fmt12(r.w2.real()), fmt12(r.w2.imag()),
                      fmt12(r.w3.real()), fmt12(r.w3.imag()),
                      fmt12(rayleigh_cubic(a, r.w1)),
                      fmt12(rayleigh_secular(a, r.w1)), fmt12(alpha_star())});
  emit(rep, out);
  return 0;
}

// ---------------------------------------------------------------------------
// shift

int cmd_shift(const std::string& bc_s, int dim, double lambda, double mu,
              int grid, bool check_b, const OutputOptions& out) {
  const Boundary bc = parse_bc(bc_s);
  if (grid < 2) throw CLI::ValidationError("--grid", "need at least 2 points");
  const Material m(lambda, mu, dim, AdmissibilityMode::extended);
  // Sample the shift at xi = 1 from 0 to 25% past the last breakpoint,
  // inserting the exact breakpoints (where the value jumps; the flag column
  // marks them).
  const std::vector<double> bps = shift_breakpoints(m, bc, 1.0);
  const double l_hi = 1.25 * bps.back();
  std::vector<double> grid_pts;
  grid_pts.reserve(grid + bps.size());
  for (int i = 0; i < grid; ++i)
    grid_pts.push_back(l_hi * i / (grid - 1));
  grid_pts.insert(grid_pts.end(), bps.begin(), bps.end());
  std::sort(grid_pts.begin(), grid_pts.end());
  grid_pts.erase(std::unique(grid_pts.begin(), grid_pts.end()),
                 grid_pts.end());

  Report rep;
  rep.schema = "shift";
  rep.columns = {"lambda", "shift", "perp", "plane", "breakpoint"};
  for (double L : grid_pts) {
    const ShiftEval ev = shift(m, bc, 1.0, L);
    const ShiftComponents comp = shift_components(m, bc, 1.0, L);
    rep.rows.push_back({fmt12(L), fmt12(ev.value), fmt12(comp.perp),
                        fmt12(comp.plane), ev.at_breakpoint ? "1" : "0"});
  }
  {
    std::ostringstream note;
    note << "breakpoints at lambda =";
    for (double b : bps) note << " " << fmt12(b);
    rep.notes.push_back(note.str());
  }
  if (check_b) {
    const double bs = b_from_shift(m, bc);
    const double bq = weyl_b(m, bc);
    std::ostringstream note;
    note << "b_from_shift=" << fmt12(bs) << " b_quadrature=" << fmt12(bq)
         << " abs_delta=" << fmt12(std::fabs(bs - bq));
    rep.notes.push_back(note.str());
  }
  emit(rep, out);
  return 0;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(const std::string& model, const std::string& bc_s, double lambda,
              double mu, double h, double lambda_max, int samples,
              double grid_factor, const std::string& cache, bool emit_liu,
              const OutputOptions& out) {
  const Boundary bc = parse_bc(bc_s);
  if (samples < 1) throw CLI::ValidationError("--samples", "need >= 1");
  if (!(lambda_max > 0.0))
    throw CLI::ValidationError("--lambda-max", "must be > 0");

  const bool disk = model == "disk";
  if (!disk && model != "cylinder")
    throw CLI::ValidationError("--model", "expected disk|cylinder: " + model);

  const int dim = disk ? 2 : 3;
  const Material m(lambda, mu, dim, AdmissibilityMode::extended);

  SpectrumMeta meta;
  if (disk) {
    meta.geometry = "disk";
  } else {
    if (!(h > 0.0)) throw CLI::ValidationError("--h", "must be > 0");
    char g[64];
    std::snprintf(g, sizeof g, "cylinder(%.17g)", h);
    meta.geometry = g;
  }
  meta.bc = bc;
  meta.lambda = lambda;
  meta.mu = mu;
  meta.lambda_max = lambda_max;

  std::optional<CountingFunction> spectrum;
  bool from_cache = false;
  if (!cache.empty()) {
    std::ifstream probe(cache);
    if (probe.good()) {
      auto [cmeta, ccf] = load_spectrum_csv(cache);
      if (cmeta.geometry != meta.geometry || cmeta.bc != meta.bc ||
          cmeta.lambda != meta.lambda || cmeta.mu != meta.mu ||
          cmeta.lambda_max != meta.lambda_max)
        throw CLI::ValidationError(
            "--cache", "cached spectrum was computed for different "
                       "parameters: " + cache);
      spectrum = std::move(ccf);
      from_cache = true;
    }
  }
  if (!spectrum) {
    if (disk) {
      DiskScanOptions opt;
      opt.lambda_max = lambda_max;
      if (grid_factor > 0.0) opt.grid_factor = grid_factor;
      spectrum = disk_spectrum(m, bc, opt);
    } else {
      CylinderScanOptions opt;
      opt.lambda_max = lambda_max;
      if (grid_factor > 0.0) opt.grid_factor = grid_factor;
      spectrum = cylinder_spectrum(m, bc, h, opt);
    }
    if (!cache.empty()) save_spectrum_csv(cache, meta, *spectrum);
  }

  const double a = weyl_a(m);
  const double b = weyl_b(m, bc);
  const double b_liu = weyl_b_liu(m);
  const double vol = disk ? M_PI : 4.0 * M_PI * M_PI * h;
  const double bvol = disk ? 2.0 * M_PI : 8.0 * M_PI * M_PI;

  Report rep;
  rep.schema = emit_liu ? "count+liu" : "count";
  rep.columns = {"lambda", "count", "residual", "two_term_boundary"};
  if (emit_liu) rep.columns.push_back("liu_boundary");
  for (int i = 1; i <= samples; ++i) {
    const double L = lambda_max * i / samples;
    const double n = static_cast<double>(spectrum->count(L));
    const double bulk = a * vol * std::pow(L, 0.5 * dim);
    const double bd = b * bvol * std::pow(L, 0.5 * (dim - 1));
    std::vector<std::string> row = {fmt12(L), fmt12(n), fmt12(n - bulk),
                                    fmt12(bd)};
    if (emit_liu)
      row.push_back(fmt12(b_liu * bvol * std::pow(L, 0.5 * (dim - 1))));
    rep.rows.push_back(std::move(row));
  }
  if (from_cache) rep.notes.push_back("spectrum loaded from cache");
  for (const auto& n : spectrum->notes) rep.notes.push_back(n);
  emit(rep, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-term Weyl asymptotics for the linear elasticity operator:\n"
      "boundary coefficients, Rayleigh roots, spectral shift profiles, and\n"
      "exactly computed model spectra (unit disk, flat cylinder).\n"
      "Materials are accepted on the extended window mu > 0, lambda + mu > 0."};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");  // keep -h free for count --h

  OutputOptions out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "Output path (default: stdout)");

  // coeffs
  auto* coeffs = app.add_subcommand(
      "coeffs", "Weyl coefficients a, b_dir, b_free (+ heat variants)");
  std::string dim_spec = "3";
  double c_lambda = 2.0, c_mu = 1.0;
  std::optional<std::string> sweep;
  bool liu = false;
  coeffs->add_option("--dim", dim_spec, "Dimension, e.g. 3 or 2..5")
      ->capture_default_str();
  coeffs->add_option("--lambda", c_lambda, "Lame lambda")->capture_default_str();
  coeffs->add_option("--mu", c_mu, "Lame mu (shear modulus)")
      ->capture_default_str();
  std::string sweep_s;
  auto* sweep_opt = coeffs->add_option(
      "--alpha-sweep", sweep_s,
      "Sweep alpha = mu/(lambda+2mu) as lo:hi:n (mu = 1), instead of "
      "--lambda/--mu");
  coeffs->add_flag("--liu", liu,
                   "Also emit the one-wave surrogate b_liu and its ratio to "
                   "b_dir");

  // rayleigh
  auto* rayleigh = app.add_subcommand(
      "rayleigh", "Rayleigh cubic roots and surface wave speed factor");
  std::optional<double> r_alpha, r_lambda, r_mu;
  double r_alpha_v = 0.0, r_lambda_v = 0.0, r_mu_v = 0.0;
  auto* r_alpha_opt = rayleigh->add_option("--alpha", r_alpha_v,
                                           "alpha = mu/(lambda+2mu) in (0,1)");
  auto* r_lambda_opt = rayleigh->add_option("--lambda", r_lambda_v, "Lame lambda");
  auto* r_mu_opt = rayleigh->add_option("--mu", r_mu_v, "Lame mu");

  // shift
  auto* shift_cmd = app.add_subcommand(
      "shift", "Spectral shift profile at unit boundary frequency");
  std::string s_bc = "dir";
  int s_dim = 3, s_grid = 400;
  double s_lambda = 2.0, s_mu = 1.0;
  bool s_check_b = false;
  shift_cmd->add_option("--bc", s_bc, "Boundary condition: dir|free")
      ->capture_default_str();
  shift_cmd->add_option("--dim", s_dim, "Dimension >= 2")->capture_default_str();
  shift_cmd->add_option("--lambda", s_lambda, "Lame lambda")
      ->capture_default_str();
  shift_cmd->add_option("--mu", s_mu, "Lame mu")->capture_default_str();
  shift_cmd->add_option("--grid", s_grid, "Number of sample points")
      ->capture_default_str();
  shift_cmd->add_flag("--check-b", s_check_b,
                      "Append the b_from_shift vs quadrature consistency note");

  // count
  auto* count = app.add_subcommand(
      "count", "Model spectrum, counting function, and two-term residuals");
  count->set_help_flag("--help", "Print help");
  std::string m_model = "disk", m_bc = "dir", m_cache;
  double m_lambda = 2.0, m_mu = 1.0, m_h = 3.141592653589793;
  double m_lambda_max = 0.0, m_grid_factor = 0.0;
  int m_samples = 200;
  bool m_emit_liu = false;
  count->add_option("--model", m_model, "Geometry: disk|cylinder")
      ->capture_default_str();
  count->add_option("--bc", m_bc, "Boundary condition: dir|free")
      ->capture_default_str();
  count->add_option("--lambda", m_lambda, "Lame lambda")->capture_default_str();
  count->add_option("--mu", m_mu, "Lame mu")->capture_default_str();
  count->add_option("--h", m_h, "Cylinder height")->capture_default_str();
  count->add_option("--lambda-max", m_lambda_max,
                    "Spectral window top (default: 2000 disk, 500 cylinder)");
  count->add_option("--samples", m_samples, "Grid points in the report")
      ->capture_default_str();
  count->add_option("--grid-factor", m_grid_factor,
                    "Scan resolution override (points per expected spacing)");
  count->add_option("--cache", m_cache,
                    "Spectrum cache CSV: reused if present, written if not");
  count->add_flag("--emit-liu", m_emit_liu,
                  "Also emit the boundary term predicted by the one-wave "
                  "surrogate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs->parsed()) {
      if (*sweep_opt) sweep = sweep_s;
      return cmd_coeffs(parse_dims(dim_spec), c_lambda, c_mu, sweep, liu, out);
    }
    if (rayleigh->parsed()) {
      if (*r_alpha_opt) r_alpha = r_alpha_v;
      if (*r_lambda_opt) r_lambda = r_lambda_v;
      if (*r_mu_opt) r_mu = r_mu_v;
      return cmd_rayleigh(r_alpha, r_lambda, r_mu, out);
    }
    if (shift_cmd->parsed())
      return cmd_shift(s_bc, s_dim, s_lambda, s_mu, s_grid, s_check_b, out);
    if (count->parsed()) {
      if (m_lambda_max == 0.0)
        m_lambda_max = (m_model == "cylinder") ? 500.0 : 2000.0;
      return cmd_count(m_model, m_bc, m_lambda, m_mu, m_h, m_lambda_max,
                       m_samples, m_grid_factor, m_cache, m_emit_liu, out);
    }
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
