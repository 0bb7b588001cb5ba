#pragma once

#include <cstddef>
#include <vector>

namespace elastoweyl {

// Truncated Taylor series about t = 0 with a fixed number of retained
// coefficients: f(t) = c[0] + c[1] t + ... + c[order] t^order.
//
// All binary operations require matching lengths.  Division and square
// root require a nonzero (respectively positive) constant term; both are
// computed coefficient-by-coefficient, so the result is the exact
// truncation of the analytic operation.  This is the tool used to extract
// k-th Taylor coefficients of the boundary-term generating functions in
// odd dimensions -- never finite differences, which lose every digit the
// closed forms are supposed to pin down.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1, 0.0) {}
  PowerSeries(std::initializer_list<double> coeffs) : c_(coeffs) {
    if (c_.empty()) c_.assign(1, 0.0);
  }

  static PowerSeries constant(double value, std::size_t order);
  // c0 + c1 * t, truncated/padded to the given order.
  static PowerSeries linear(double c0, double c1, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }
  const std::vector<double>& coefficients() const { return c_; }

  PowerSeries operator+(const PowerSeries& other) const;
  PowerSeries operator-(const PowerSeries& other) const;
  PowerSeries operator*(double scalar) const;

  friend PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries ps_sqrt(const PowerSeries& a);
  friend PowerSeries ps_compose_linear(const PowerSeries& a, double g0,
                                       double g1);

 private:
  std::vector<double> c_;
};

// Cauchy product, truncated to the common order.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

// a / b; requires b[0] != 0.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);

// sqrt(a); requires a[0] > 0.
PowerSeries ps_sqrt(const PowerSeries& a);

// a(g0 + g1 t) by Horner's scheme in truncated arithmetic.  Exact when a
// is regarded as a polynomial of degree <= order.
PowerSeries ps_compose_linear(const PowerSeries& a, double g0, double g1);

}  // namespace elastoweyl
