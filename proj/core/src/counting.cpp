#include "elastoweyl/spectra/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace elastoweyl {

CountingFunction::CountingFunction(std::vector<EigenvalueEntry> entries,
                                   double merge_tol) {
  std::sort(entries.begin(), entries.end(),
            [](const EigenvalueEntry& a, const EigenvalueEntry& b) {
              return a.lambda < b.lambda;
            });
  for (auto& e : entries) {
    if (e.multiplicity <= 0)
      throw std::invalid_argument("CountingFunction: multiplicity must be > 0");
    if (!entries_.empty() &&
        e.lambda - entries_.back().lambda <=
            merge_tol * std::max(1.0, e.lambda)) {
      entries_.back().multiplicity += e.multiplicity;
      if (entries_.back().branch != e.branch &&
          entries_.back().branch.find('|') == std::string::npos)
        entries_.back().branch += "|" + e.branch;
      continue;
    }
    entries_.push_back(std::move(e));
  }
  below_.resize(entries_.size() + 1, 0);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    below_[i + 1] = below_[i] + entries_[i].multiplicity;
}

std::int64_t CountingFunction::count(double lambda) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), lambda,
      [](const EigenvalueEntry& e, double v) { return e.lambda < v; });
  return below_[static_cast<std::size_t>(it - entries_.begin())];
}

std::int64_t CountingFunction::total_multiplicity() const {
  return below_.empty() ? 0 : below_.back();
}

namespace {

std::string bc_name(Boundary bc) {
  return bc == Boundary::dirichlet ? "dir" : "free";
}

Boundary bc_from_name(const std::string& s) {
  if (s == "dir") return Boundary::dirichlet;
  if (s == "free") return Boundary::free_boundary;
  throw std::runtime_error("spectrum cache: unknown boundary tag '" + s + "'");
}

}  // namespace

void save_spectrum_csv(const std::string& path, const SpectrumMeta& meta,
                       const CountingFunction& spectrum) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("spectrum cache: cannot open '" + path +
                             "' for writing");
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "# spectrum-cache v1\n"
                "# lame_lambda=%.17g mu=%.17g lambda_max=%.17g\n"
                "# columns: geometry,bc,lambda,multiplicity,branch\n",
                meta.lambda, meta.mu, meta.lambda_max);
  out << buf;
  for (const auto& e : spectrum.entries()) {
    std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%lld,%s\n",
                  meta.geometry.c_str(), bc_name(meta.bc).c_str(), e.lambda,
                  static_cast<long long>(e.multiplicity), e.branch.c_str());
    out << buf;
  }
  if (!out) throw std::runtime_error("spectrum cache: write failed: " + path);
}

std::pair<SpectrumMeta, CountingFunction> load_spectrum_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("spectrum cache: cannot open '" + path + "'");
  SpectrumMeta meta;
  std::vector<EigenvalueEntry> entries;
  std::string line;
  bool have_meta = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string token;
      while (ss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "lame_lambda") meta.lambda = std::stod(value);
        if (key == "mu") meta.mu = std::stod(value);
        if (key == "lambda_max") meta.lambda_max = std::stod(value);
      }
      continue;
    }
    std::istringstream ss(line);
    std::string geometry, bc, lambda_s, mult_s, branch;
    if (!std::getline(ss, geometry, ',') || !std::getline(ss, bc, ',') ||
        !std::getline(ss, lambda_s, ',') || !std::getline(ss, mult_s, ',') ||
        !std::getline(ss, branch))
      throw std::runtime_error("spectrum cache: malformed record: " + line);
    if (!have_meta) {
      meta.geometry = geometry;
      meta.bc = bc_from_name(bc);
      have_meta = true;
    } else if (geometry != meta.geometry || bc_from_name(bc) != meta.bc) {
      throw std::runtime_error(
          "spectrum cache: inconsistent geometry/bc fields in " + path);
    }
    entries.push_back(
        {std::stod(lambda_s), std::stoll(mult_s), branch});
  }
  if (!have_meta)
    throw std::runtime_error("spectrum cache: no records in " + path);
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].lambda < entries[i - 1].lambda)
      throw std::runtime_error("spectrum cache: records not sorted in " +
                               path);
  return {meta, CountingFunction(std::move(entries))};
}

}  // namespace elastoweyl
