#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "elastoweyl/material.hpp"
#include "elastoweyl/spectra/cylinder.hpp"
#include "test_util.hpp"

using namespace elastoweyl;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Material kM(2.0, 1.0, 3);

bool has_entry(const CountingFunction& cf, double lambda, std::int64_t mult,
               const std::string& branch_part) {
  for (const auto& e : cf.entries()) {
    if (std::fabs(e.lambda - lambda) <= 1e-9 * std::max(1.0, lambda)) {
      return e.multiplicity == mult &&
             e.branch.find(branch_part) != std::string::npos;
    }
  }
  return false;
}

bool sh_changes_sign_at(Boundary bc, double h, double K, double root) {
  const double eps = 1e-7 * std::max(1.0, root);
  return cylinder_secular(kM, bc, h, K, root - eps).sh *
             cylinder_secular(kM, bc, h, K, root + eps).sh <
         0.0;
}

bool lamb_changes_sign_at(Boundary bc, double h, double K, double root) {
  const double eps = 1e-7 * std::max(1.0, root);
  return cylinder_secular(kM, bc, h, K, root - eps).lamb *
             cylinder_secular(kM, bc, h, K, root + eps).lamb <
         0.0;
}

}  // namespace

TEST_CASE("sum_two_squares counts lattice points on circles") {
  CHECK(sum_two_squares(0) == 1);
  CHECK(sum_two_squares(1) == 4);
  CHECK(sum_two_squares(2) == 4);
  CHECK(sum_two_squares(3) == 0);   // 3 mod 4 with odd exponent
  CHECK(sum_two_squares(4) == 4);
  CHECK(sum_two_squares(5) == 8);   // (+-1,+-2) and swaps
  CHECK(sum_two_squares(7) == 0);
  CHECK(sum_two_squares(9) == 4);
  CHECK(sum_two_squares(25) == 12);
  CHECK_THROWS_AS((void)sum_two_squares(-1), std::invalid_argument);
}

TEST_CASE("horizontal-shear block has the elementary root families") {
  // Dirichlet at K = 2, h = pi: L = mu (K + m^2), m >= 1.
  for (double root : {3.0, 6.0, 11.0, 18.0, 27.0})
    CHECK(sh_changes_sign_at(Boundary::dirichlet, kPi, 2.0, root));
  // Free at K = 1 adds the m = 0 member L = mu K.
  for (double root : {1.0, 2.0, 5.0, 10.0, 17.0, 26.0})
    CHECK(sh_changes_sign_at(Boundary::free_boundary, kPi, 1.0, root));
  // Same family at a non-square height h = 1.5, K = 3, m = 1.
  const double r = 3.0 + (kPi / 1.5) * (kPi / 1.5);
  CHECK(sh_changes_sign_at(Boundary::dirichlet, 1.5, 3.0, r));
  // No Dirichlet root at L = mu K (the m = 0 mode is pure sliding).
  CHECK_FALSE(sh_changes_sign_at(Boundary::dirichlet, kPi, 2.0, 2.0));
}

TEST_CASE("coupled block vanishes at the reference roots, K = 1, h = pi") {
  // References from a 30-digit evaluation of the plate dispersion
  // relations (symmetric and antisymmetric families together).
  CHECK(lamb_changes_sign_at(Boundary::dirichlet, kPi, 1.0,
                             3.34420352451197689));
  CHECK(lamb_changes_sign_at(Boundary::dirichlet, kPi, 1.0,
                             4.35125396327082924));
  CHECK(lamb_changes_sign_at(Boundary::free_boundary, kPi, 1.0,
                             0.613163836705791795));
  CHECK(lamb_changes_sign_at(Boundary::free_boundary, kPi, 1.0,
                             2.0));  // shear-only plate mode, exact
  CHECK(lamb_changes_sign_at(Boundary::free_boundary, kPi, 1.0,
                             3.68372759524074114));
  CHECK(lamb_changes_sign_at(Boundary::free_boundary, kPi, 1.0,
                             4.43441976069754882));
}

TEST_CASE("cylinder_secular validates arguments and decouples at K = 0") {
  CHECK_THROWS_AS(
      (void)cylinder_secular(Material(2.0, 1.0, 2), Boundary::dirichlet, kPi,
                             1.0, 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)cylinder_secular(kM, Boundary::dirichlet, 0.0, 1.0, 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)cylinder_secular(kM, Boundary::dirichlet, kPi, -1.0, 1.0),
      std::invalid_argument);
  const CylinderSecular s =
      cylinder_secular(kM, Boundary::dirichlet, kPi, 0.0, 3.0);
  CHECK(std::isnan(s.lamb));
  CHECK(std::isfinite(s.sh));
}

TEST_CASE("Dirichlet spectrum, h = pi, up to 4.5") {
  CylinderScanOptions opt;
  opt.lambda_max = 4.5;
  const CountingFunction cf =
      cylinder_spectrum(kM, Boundary::dirichlet, kPi, opt);

  REQUIRE_FALSE(cf.entries().empty());
  // No rigid modes; the ground state is the first axial shear pair.
  CHECK(abs_err(cf.entries().front().lambda, 1.0) < 1e-12);
  CHECK(cf.entries().front().multiplicity == 2);
  CHECK(cf.entries().front().branch == "K=0:axial");

  CHECK(has_entry(cf, 2.0, 4, "K=1:sh"));
  CHECK(has_entry(cf, 3.0, 4, "K=2:sh"));
  CHECK(has_entry(cf, 3.34420352451197689, 4, "K=1:lamb"));
  CHECK(has_entry(cf, 4.35125396327082924, 4, "K=1:lamb"));
  // At L = 4 the m = 2 shear and m = 1 pressure axial modes coincide:
  // multiplicity 2 + 1 under the shared label.
  CHECK(has_entry(cf, 4.0, 3, "K=0:axial"));

  CHECK_FALSE(cf.notes.empty());
}

TEST_CASE("free spectrum, h = pi, up to 5.5: rigid modes and lattice "
          "coincidences") {
  CylinderScanOptions opt;
  opt.lambda_max = 5.5;
  const CountingFunction cf =
      cylinder_spectrum(kM, Boundary::free_boundary, kPi, opt);

  REQUIRE_FALSE(cf.entries().empty());
  CHECK(cf.entries().front().lambda == 0.0);
  CHECK(cf.entries().front().multiplicity == 3);
  CHECK(cf.entries().front().branch == "rigid");

  // Lowest positive eigenvalue: the K = 1 flexural quartet.
  CHECK(abs_err(cf.entries()[1].lambda, 0.613163836705791795) < 1e-9);
  CHECK(cf.entries()[1].multiplicity == 4);
  CHECK(cf.entries()[1].branch == "K=1:lamb");

  // L = 1: axial shear pair (x2) + the K = 1 horizontal-shear quartet.
  CHECK(has_entry(cf, 1.0, 6, "K=0:axial"));
  CHECK(has_entry(cf, 1.0, 6, "K=1:sh"));
  // L = 2: K=1 sh quartet + K=1 Lamb (shear-plate) quartet + K=2 sh m=0
  // quartet -> multiplicity 12.
  CHECK(has_entry(cf, 2.0, 12, "sh"));
  CHECK(has_entry(cf, 3.0, 4, "K=2:sh"));
  CHECK(has_entry(cf, 3.68372759524074114, 4, "K=1:lamb"));
  CHECK(has_entry(cf, 4.43441976069754882, 4, "K=1:lamb"));
  // L = 4: axial (2 shear + 1 pressure) + K=4 sh m=0 quartet -> 7.
  CHECK(has_entry(cf, 4.0, 7, "axial"));
  // L = 5: three sh quartets (K=1 m=2, K=4 m=1, K=5 m=0 with r2(5)=8) -> 16.
  CHECK(has_entry(cf, 5.0, 16, "sh"));

  // Strict counting across the rigid modes.
  CHECK(cf.count(0.0) == 0);
  CHECK(cf.count(0.5) == 3);
  CHECK(cf.count(0.7) == 7);
}

TEST_CASE("scan is deterministic and independent of threading") {
  CylinderScanOptions par;
  par.lambda_max = 4.0;
  CylinderScanOptions ser = par;
  ser.parallel = false;
  for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
    const CountingFunction a = cylinder_spectrum(kM, bc, kPi, par);
    const CountingFunction b = cylinder_spectrum(kM, bc, kPi, ser);
    REQUIRE(a.entries().size() == b.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      CHECK(a.entries()[i].lambda == b.entries()[i].lambda);  // bit exact
      CHECK(a.entries()[i].multiplicity == b.entries()[i].multiplicity);
      CHECK(a.entries()[i].branch == b.entries()[i].branch);
    }
    CHECK(a.notes == b.notes);
  }
}

TEST_CASE("cylinder_spectrum validates its arguments") {
  CHECK_THROWS_AS(
      (void)cylinder_spectrum(Material(2.0, 1.0, 2), Boundary::dirichlet, kPi),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)cylinder_spectrum(kM, Boundary::dirichlet, -1.0),
      std::invalid_argument);
  CylinderScanOptions bad;
  bad.lambda_max = -5.0;
  CHECK_THROWS_AS((void)cylinder_spectrum(kM, Boundary::dirichlet, kPi, bad),
                  std::invalid_argument);
}
