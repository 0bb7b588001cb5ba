#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elastoweyl/material.hpp"

namespace elastoweyl {

struct EigenvalueEntry {
  double lambda = 0.0;
  std::int64_t multiplicity = 0;
  std::string branch;  // e.g. "k=3", "K=25:sh", "K=4:lamb", "rigid"
};

// Multiplicity-weighted eigenvalue counting function built from a list of
// (eigenvalue, multiplicity) entries.  The convention is strict:
//     count(L) = #{ lambda_n < L },
// so count(lambda_n) excludes lambda_n itself and zero modes (lambda = 0)
// are excluded for L <= 0 but included for every L > 0.
//
// Entries closer together than merge_tol * max(1, lambda) are merged
// (multiplicities add); this treats roots that agree to refinement
// accuracy, e.g. arithmetic coincidences across branches, as one level.
class CountingFunction {
 public:
  CountingFunction() = default;
  explicit CountingFunction(std::vector<EigenvalueEntry> entries,
                            double merge_tol = 1e-9);

  std::int64_t count(double lambda) const;
  const std::vector<EigenvalueEntry>& entries() const { return entries_; }
  std::int64_t total_multiplicity() const;

  // Assembly diagnostics (suspect roots, branch cutoffs, merges); carried
  // along so no ambiguity is silently dropped.
  std::vector<std::string> notes;

 private:
  std::vector<EigenvalueEntry> entries_;       // sorted by lambda
  std::vector<std::int64_t> below_;            // below_[i] = sum mult < entries_[i]
};

// Identification of a computed spectrum, persisted with the cache so a
// cached file is never silently reused for different parameters.
struct SpectrumMeta {
  std::string geometry;  // "disk" or "cylinder(<h>)"
  Boundary bc = Boundary::dirichlet;
  double lambda = 0.0;   // Lame lambda
  double mu = 0.0;
  double lambda_max = 0.0;
};

// CSV cache, one record per line: geometry,bc,lambda,multiplicity,branch
// sorted by lambda, with '#' header lines carrying the metadata.  Values
// are written with 17 significant digits so a round trip is exact.
void save_spectrum_csv(const std::string& path, const SpectrumMeta& meta,
                       const CountingFunction& spectrum);
std::pair<SpectrumMeta, CountingFunction> load_spectrum_csv(
    const std::string& path);

}  // namespace elastoweyl
