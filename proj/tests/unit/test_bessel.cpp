#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elastoweyl/numerics/bessel.hpp"
#include "test_util.hpp"

using elastoweyl::bessel_j;
using elastoweyl::bessel_j_pair;
using elastoweyl::bessel_j_prime;

// Reference values computed with 30-digit arbitrary-precision arithmetic.
TEST_CASE("bessel_j matches high-precision references") {
  struct Ref {
    int n;
    double x;
    double value;
  };
  const Ref refs[] = {
      {0, 1.0, 0.765197686557966552},
      {1, 1.0, 0.440050585744933516},
      {2, 1.0, 0.114903484931900480},
      {10, 10.0, 0.207486106633358858},
      {40, 20.0, 9.90238941374468610e-10},       // deep Miller regime
      {60, 59.0, 0.0881741216427060164},         // order ~ argument
      {100, 50.0, 1.11592736908380928e-21},      // strongly evanescent
      {25, 0.01, 1.92133906048437613e-83},       // ascending series, tiny x
      {200, 14.0, 1.03939970814518598e-206},     // near the underflow floor
      {1, 700.5, 0.0228467453756427072},         // long oscillatory range
  };
  for (const Ref& r : refs) {
    CAPTURE(r.n);
    CAPTURE(r.x);
    CHECK(rel_err(bessel_j(r.n, r.x), r.value) < 1e-12);
  }
}

TEST_CASE("bessel_j at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("bessel_j vanishes at the first zero of J_1") {
  const double j11 = 3.83170597020751232;  // first positive zero of J_1
  CHECK(std::fabs(bessel_j(1, j11)) < 1e-14);
  // J_1' = J_0 - J_1/x does not vanish there (simple zero).
  CHECK(std::fabs(bessel_j_prime(1, j11)) > 0.3);
}

TEST_CASE("three-term recurrence holds across regimes") {
  for (double x : {0.3, 2.0, 8.5, 31.0, 240.0}) {
    for (int n : {1, 2, 5, 12, 40}) {
      const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
      const double rhs = 2.0 * n / x * bessel_j(n, x);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(abs_err(lhs, rhs) < 1e-12 * (1.0 + std::fabs(rhs)));
    }
  }
}

TEST_CASE("bessel_j_pair is consistent with single evaluations") {
  for (double x : {0.7, 5.0, 26.0}) {
    for (int n : {0, 3, 17}) {
      const auto [jn, jn1] = bessel_j_pair(n, x);
      CHECK(rel_err(jn, bessel_j(n, x)) < 1e-13);
      CHECK(rel_err(jn1, bessel_j(n + 1, x)) < 1e-13);
    }
  }
}

TEST_CASE("bessel_j_prime satisfies J_0' = -J_1") {
  for (double x : {0.4, 1.0, 6.2, 55.0}) {
    CHECK(rel_err(bessel_j_prime(0, x), -bessel_j(1, x)) < 1e-13);
  }
}

TEST_CASE("Neumann normalization: J_0 + 2 sum J_2k = 1") {
  for (double x : {1.0, 10.0, 37.5}) {
    double s = bessel_j(0, x);
    for (int k = 1; k < 80; ++k) s += 2.0 * bessel_j(2 * k, x);
    CHECK(abs_err(s, 1.0) < 1e-12);
  }
}

TEST_CASE("bessel_j rejects invalid input") {
  CHECK_THROWS_AS((void)bessel_j(-1, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)bessel_j(2, -0.5), std::domain_error);
  CHECK_THROWS_AS((void)bessel_j(2, 2.0e6), std::domain_error);
  CHECK_THROWS_AS((void)bessel_j(2, std::nan("")), std::domain_error);
}
