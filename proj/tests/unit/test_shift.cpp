#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "elastoweyl/material.hpp"
#include "elastoweyl/rayleigh.hpp"
#include "elastoweyl/shift.hpp"
#include "elastoweyl/weyl.hpp"
#include "test_util.hpp"

using namespace elastoweyl;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Material kM3(2.0, 1.0, 3);  // alpha = 1/4
}  // namespace

TEST_CASE("frozen value in the middle window, d = 3, lambda = 2, mu = 1") {
  // Lambda = 2, xi = 1: plane part -1/4 - arctan(sqrt(1/2))/pi, out-of-plane
  // part -1/4.
  const ShiftEval ev = shift_dir(kM3, 1.0, 2.0);
  CHECK(abs_err(ev.value, -0.695913276015303635) < 1e-15);
  CHECK_FALSE(ev.at_breakpoint);
  const ShiftComponents parts =
      shift_components(kM3, Boundary::dirichlet, 1.0, 2.0);
  CHECK(abs_err(parts.plane, -0.445913276015303635) < 1e-15);
  CHECK(abs_err(parts.perp, -0.25) < 1e-16);
}

TEST_CASE("piecewise plateaus and the top values +-d/4") {
  const double w1 = rayleigh_roots(kM3.alpha()).w1;
  // Free: below the Rayleigh threshold the shift vanishes, between the
  // Rayleigh and shear thresholds it equals 1 (the bound state).
  CHECK(shift_free(kM3, 1.0, 0.5 * w1).value == 0.0);
  CHECK(shift_free(kM3, 1.0, 0.5 * (w1 + 1.0)).value == 1.0);
  CHECK(shift_dir(kM3, 1.0, 0.5 * (w1 + 1.0)).value == 0.0);
  // Above the pressure threshold the value saturates at -d/4 and +d/4.
  CHECK(abs_err(shift_dir(kM3, 1.0, 10.0).value, -0.75) < 1e-15);
  CHECK(abs_err(shift_free(kM3, 1.0, 10.0).value, 0.75) < 1e-15);
  // d = 2 has no out-of-plane part at all.
  const Material m2(2.0, 1.0, 2);
  CHECK(abs_err(shift_dir(m2, 1.0, 10.0).value, -0.5) < 1e-15);
  CHECK(abs_err(shift_free(m2, 1.0, 10.0).value, 0.5) < 1e-15);
  CHECK(shift_components(m2, Boundary::dirichlet, 1.0, 10.0).perp == 0.0);
}

TEST_CASE("breakpoints are listed ascending and flagged, values are "
          "right-continuous") {
  const std::vector<double> bd =
      shift_breakpoints(kM3, Boundary::dirichlet, 1.0);
  REQUIRE(bd.size() == 2);
  CHECK(bd[0] == 1.0);
  CHECK(bd[1] == 4.0);
  const std::vector<double> bf =
      shift_breakpoints(kM3, Boundary::free_boundary, 1.0);
  REQUIRE(bf.size() == 3);
  CHECK(abs_err(bf[0], rayleigh_roots(0.25).w1) < 1e-14);
  CHECK(bf[1] == 1.0);
  CHECK(bf[2] == 4.0);

  for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
    for (double t : shift_breakpoints(kM3, bc, 1.0)) {
      const ShiftEval at = shift(kM3, bc, 1.0, t);
      CHECK(at.at_breakpoint);
      const ShiftEval above = shift(kM3, bc, 1.0, t + 1e-11);
      CHECK_FALSE(above.at_breakpoint);
      // The shift approaches its threshold value with a square-root cusp,
      // so a 1e-11 offset still moves it by ~1e-6; the jumps are >= 1/4.
      CHECK(abs_err(at.value, above.value) < 1e-5);
    }
  }
  // Off the thresholds the flag stays clear.
  CHECK_FALSE(shift_dir(kM3, 1.0, 2.5).at_breakpoint);
}

TEST_CASE("homogeneity: shift(s xi, s^2 Lambda) = shift(xi, Lambda)") {
  for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
    for (double L : {0.4, 0.9, 2.0, 5.0}) {
      const double s = 3.0;
      CHECK(abs_err(shift(kM3, bc, s, s * s * L).value,
                    shift(kM3, bc, 1.0, L).value) < 1e-14);
    }
  }
  CHECK_THROWS_AS((void)shift_dir(kM3, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)shift_breakpoints(kM3, Boundary::dirichlet, -1.0),
                  std::invalid_argument);
}

TEST_CASE("plane scattering phase") {
  // Dirichlet at Lambda = 2: -2 arctan(sqrt(1/2)).
  CHECK(abs_err(scattering_phase(kM3, Boundary::dirichlet, 2.0),
                -1.23095941734077468) < 1e-15);
  // Free at Lambda = 2: the numerator (y-2)^2 vanishes, so the phase does.
  CHECK(scattering_phase(kM3, Boundary::free_boundary, 2.0) == 0.0);
  // Above the pressure threshold both phases are zero.
  CHECK(scattering_phase(kM3, Boundary::dirichlet, 5.0) == 0.0);
  CHECK(scattering_phase(kM3, Boundary::free_boundary, 5.0) == 0.0);
  // Below the continuous spectrum the phase is undefined.
  CHECK_THROWS_AS((void)scattering_phase(kM3, Boundary::dirichlet, 0.5),
                  std::invalid_argument);
}

TEST_CASE("free phase jump at the pressure threshold: -pi when lambda != 0, "
          "absent when lambda = 0") {
  // lambda = 2: V -> +inf as Lambda -> 4-, so the phase tends to pi and
  // drops to 0 at the threshold.
  const double below = scattering_phase(kM3, Boundary::free_boundary,
                                        4.0 - 1e-9);
  CHECK(abs_err(below, kPi) < 1e-3);
  CHECK(scattering_phase(kM3, Boundary::free_boundary, 4.0) == 0.0);
  // lambda = 0: the numerator vanishes at the same rate, the phase is
  // continuous (a threshold resonance replaces the jump).
  const Material soft(0.0, 1.0, 3);
  CHECK(std::fabs(scattering_phase(soft, Boundary::free_boundary,
                                   2.0 - 1e-9)) < 1e-6);
}

TEST_CASE("out-of-plane phase and the Rayleigh bound state") {
  CHECK(scattering_phase_perp(kM3, Boundary::dirichlet) == kPi);  // d-2 odd
  CHECK(scattering_phase_perp(Material(2.0, 1.0, 4), Boundary::dirichlet) ==
        0.0);
  CHECK(scattering_phase_perp(Material(2.0, 1.0, 2), Boundary::dirichlet) ==
        0.0);
  CHECK(scattering_phase_perp(kM3, Boundary::free_boundary) == 0.0);

  CHECK(abs_err(rayleigh_bound_state(kM3), rayleigh_roots(0.25).w1) < 1e-15);
  const Material scaled(8.0, 4.0, 3);  // same alpha, mu = 4
  CHECK(abs_err(rayleigh_bound_state(scaled), 4.0 * rayleigh_roots(0.25).w1) <
        1e-14);
}

TEST_CASE("radial integral of the shift reproduces the boundary coefficient") {
  for (int d : {2, 3, 4}) {
    const Material m = material_from_alpha(0.25, d);
    for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
      CAPTURE(d);
      CHECK(abs_err(b_from_shift(m, bc), weyl_b(m, bc)) < 1e-12);
    }
  }
}
