#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elastoweyl/material.hpp"
#include "elastoweyl/weyl.hpp"
#include "test_util.hpp"

using elastoweyl::BMethod;
using elastoweyl::Boundary;
using elastoweyl::gamma_half_integer;
using elastoweyl::Material;
using elastoweyl::material_from_alpha;
using elastoweyl::weyl_a;
using elastoweyl::weyl_b;
using elastoweyl::weyl_b_liu;
using elastoweyl::weyl_b_odd;
using elastoweyl::weyl_b_table;
using elastoweyl::weyl_coefficients;
using elastoweyl::weyl_coefficients_odd;
using elastoweyl::WeylCoefficients;
using elastoweyl::oddform_identity_check;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("gamma at half-integer arguments") {
  const double sq = std::sqrt(kPi);
  CHECK(rel_err(gamma_half_integer(1), sq) < 1e-15);          // Gamma(1/2)
  CHECK(gamma_half_integer(2) == 1.0);                        // Gamma(1)
  CHECK(rel_err(gamma_half_integer(3), 0.5 * sq) < 1e-15);    // Gamma(3/2)
  CHECK(gamma_half_integer(4) == 1.0);                        // Gamma(2)
  CHECK(rel_err(gamma_half_integer(5), 0.75 * sq) < 1e-15);   // Gamma(5/2)
  CHECK(gamma_half_integer(6) == 2.0);                        // Gamma(3)
  CHECK(rel_err(gamma_half_integer(7), 1.875 * sq) < 1e-15);  // Gamma(7/2)
  CHECK(gamma_half_integer(8) == 6.0);                        // Gamma(4)
  CHECK_THROWS_AS((void)gamma_half_integer(0), std::invalid_argument);
}

TEST_CASE("bulk coefficient closed forms for lambda = 2, mu = 1") {
  CHECK(rel_err(weyl_a(Material(2.0, 1.0, 2)), 5.0 / (16.0 * kPi)) < 1e-14);
  CHECK(rel_err(weyl_a(Material(2.0, 1.0, 3)), 2.125 / (6.0 * kPi * kPi)) <
        1e-14);
}

TEST_CASE("boundary coefficient in d = 3 at alpha = 1/4: three routes agree "
          "with the exact rational multiple of 1/pi") {
  const Material m(2.0, 1.0, 3);
  const double exact = -2.7 / (16.0 * kPi);  // = -0.0537147932935146758
  CHECK(rel_err(weyl_b(m, Boundary::dirichlet), exact) < 1e-10);
  CHECK(rel_err(weyl_b_odd(m, Boundary::dirichlet), exact) < 1e-14);
  CHECK(rel_err(weyl_b_table(m, Boundary::dirichlet), exact) < 1e-14);
  CHECK(rel_err(weyl_b(m, Boundary::free_boundary), 0.0629988316405419037) <
        1e-10);
  CHECK(rel_err(weyl_b_odd(m, Boundary::free_boundary), 0.0629988316405419037) <
        1e-12);
}

// High-precision references for the quadrature path (the only route in
// even dimensions), spot checks across d and alpha.
TEST_CASE("boundary coefficient quadrature references") {
  struct Ref {
    int d;
    double alpha;
    double b_dir;
    double b_free;
  };
  const Ref refs[] = {
      {2, 0.25, -0.144194828770761822, 0.158987289262217206},
      {4, 0.40, -0.0150553271562041103, 0.0210809491299142798},
      {5, 0.30, -0.00359728375360711674, 0.00473622415867660932},
      {6, 0.70, -0.000740814934853631662, 0.00264549440059234281},
      {9, 0.85, -3.57592934028018072e-6, 2.21573941042131217e-4},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.d);
    CAPTURE(r.alpha);
    const Material m = material_from_alpha(r.alpha, r.d);
    CHECK(rel_err(weyl_b(m, Boundary::dirichlet), r.b_dir) < 1e-9);
    CHECK(rel_err(weyl_b(m, Boundary::free_boundary), r.b_free) < 1e-9);
  }
}

TEST_CASE("signs: b_dir < 0 < b_free throughout the extended window") {
  for (int d : {2, 3, 4, 7}) {
    for (double alpha : {0.02, 0.35, 0.61, 0.98}) {
      const Material m = material_from_alpha(alpha, d);
      CAPTURE(d);
      CAPTURE(alpha);
      CHECK(weyl_b(m, Boundary::dirichlet) < 0.0);
      CHECK(weyl_b(m, Boundary::free_boundary) > 0.0);
    }
  }
}

TEST_CASE("homogeneity: b scales like mu^{(1-d)/2} at fixed alpha") {
  const double s = 4.0;
  for (int d : {2, 3, 5}) {
    const Material m1(2.0, 1.0, d, elastoweyl::AdmissibilityMode::extended);
    const Material ms(2.0 * s, s, d, elastoweyl::AdmissibilityMode::extended);
    const double factor = std::pow(s, 0.5 * (1 - d));
    for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
      CAPTURE(d);
      CHECK(rel_err(weyl_b(ms, bc), factor * weyl_b(m1, bc)) < 1e-9);
    }
  }
}

TEST_CASE("odd closed forms match the tabulated polynomials") {
  for (int d : {3, 5, 7, 9}) {
    for (int i = 1; i <= 9; ++i) {
      const Material m = material_from_alpha(i / 10.0, d);
      for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
        CAPTURE(d);
        CAPTURE(i);
        CHECK(rel_err(weyl_b_odd(m, bc), weyl_b_table(m, bc)) < 1e-12);
      }
    }
  }
}

TEST_CASE("heat normalizations carry the right gamma factors") {
  for (int d : {2, 3, 4, 5}) {
    const Material m = material_from_alpha(0.37, d);
    const WeylCoefficients c = weyl_coefficients(m);
    CHECK(rel_err(c.a_heat, gamma_half_integer(d + 2) * c.a) < 1e-14);
    CHECK(rel_err(c.b_dir_heat, gamma_half_integer(d + 1) * c.b_dir) < 1e-14);
    CHECK(rel_err(c.b_free_heat, gamma_half_integer(d + 1) * c.b_free) <
          1e-14);
    CHECK(c.method == BMethod::quadrature);
  }
  const WeylCoefficients co = weyl_coefficients_odd(material_from_alpha(0.37, 3));
  CHECK(co.method == BMethod::closed_form_odd);
}

TEST_CASE("one-wave surrogate: d = 3, alpha = 1/4 gives ratio exactly 5/6") {
  const Material m(2.0, 1.0, 3);
  const double liu = weyl_b_liu(m);
  CHECK(rel_err(liu, -2.25 / (16.0 * kPi)) < 1e-14);
  CHECK(rel_err(liu / weyl_b(m, Boundary::dirichlet), 5.0 / 6.0) < 1e-10);
}

TEST_CASE("one-wave surrogate in d = 2 against references") {
  // lambda = 20, mu = 1 -> alpha = 1/22 (the falsification material).
  const Material m(20.0, 1.0, 2);
  CHECK(rel_err(weyl_b(m, Boundary::dirichlet), -0.161532605397892072) < 1e-9);
  CHECK(rel_err(weyl_b_liu(m), -0.0965434454853119168) < 1e-12);
  CHECK(rel_err(weyl_b_liu(m) / weyl_b(m, Boundary::dirichlet),
                0.597671567592) < 1e-9);
}

TEST_CASE("residue identity behind the odd-dimensional collapse") {
  for (int k : {1, 2}) {
    for (Boundary bc : {Boundary::dirichlet, Boundary::free_boundary}) {
      const auto [lhs, rhs] = oddform_identity_check(k, 0.3, bc);
      CAPTURE(k);
      CHECK(rel_err(lhs, rhs) < 1e-9);
    }
  }
  CHECK_THROWS_AS((void)oddform_identity_check(0, 0.3, Boundary::dirichlet),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)oddform_identity_check(1, 1.2, Boundary::dirichlet),
                  std::invalid_argument);
}

TEST_CASE("dimension validation of the closed-form routes") {
  const Material even = material_from_alpha(0.3, 4);
  CHECK_THROWS_AS((void)weyl_b_odd(even, Boundary::dirichlet),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)weyl_coefficients_odd(even), std::invalid_argument);
  const Material m11 = material_from_alpha(0.3, 11);
  CHECK_THROWS_AS((void)weyl_b_table(m11, Boundary::dirichlet),
                  std::invalid_argument);
}
