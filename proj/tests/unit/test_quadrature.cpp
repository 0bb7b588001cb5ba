#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elastoweyl/numerics/quadrature.hpp"
#include "test_util.hpp"

using elastoweyl::quad;
using elastoweyl::quad_no_throw;
using elastoweyl::QuadResult;

TEST_CASE("smooth integrand on a shifted interval") {
  const QuadResult r = quad([](double x) { return x * x; }, 2.0, 5.0, 1e-12);
  CHECK(r.converged);
  CHECK(abs_err(r.value, 39.0) < 1e-11);
  CHECK(r.evaluations > 0);
}

TEST_CASE("oscillatory integrand: integral of sin over one arch") {
  const QuadResult r =
      quad([](double x) { return std::sin(x); }, 0.0, 3.14159265358979324, 1e-12);
  CHECK(r.converged);
  CHECK(abs_err(r.value, 2.0) < 1e-11);
}

TEST_CASE("inverse-square-root endpoint singularity") {
  const QuadResult r =
      quad([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(abs_err(r.value, 2.0) < 1e-10);
}

TEST_CASE("logarithmic endpoint singularity") {
  const QuadResult r =
      quad([](double t) { return std::log(1.0 / t); }, 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(abs_err(r.value, 1.0) < 1e-10);
}

TEST_CASE("arctan-of-square-root boundary integrand shape") {
  // The same endpoint behaviour as the boundary-coefficient integrands:
  // arctan(sqrt((1-t)(t-1/4))) on (1/4, 1); reference from a 30-digit
  // evaluation.
  const QuadResult r = quad(
      [](double t) { return std::atan(std::sqrt((1.0 - t) * (t - 0.25))); },
      0.25, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(abs_err(r.value, 0.213629771226861105) < 1e-12);
}

TEST_CASE("non-integrable singularity is flagged, not silently accepted") {
  const QuadResult r =
      quad_no_throw([](double t) { return 1.0 / t; }, 0.0, 1.0, 1e-10);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS((void)quad([](double t) { return 1.0 / t; }, 0.0, 1.0, 1e-10),
                  std::runtime_error);
}
