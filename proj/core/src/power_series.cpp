#include "elastoweyl/numerics/power_series.hpp"

#include <cmath>
#include <stdexcept>

namespace elastoweyl {

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("PowerSeries: mismatched truncation orders");
}
}  // namespace

PowerSeries PowerSeries::constant(double value, std::size_t order) {
  PowerSeries s(order);
  s[0] = value;
  return s;
}

PowerSeries PowerSeries::linear(double c0, double c1, std::size_t order) {
  PowerSeries s(order);
  s[0] = c0;
  if (order >= 1) s[1] = c1;
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& other) const {
  require_same_order(*this, other);
  PowerSeries r(order());
  for (std::size_t k = 0; k <= order(); ++k) r[k] = c_[k] + other[k];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& other) const {
  require_same_order(*this, other);
  PowerSeries r(order());
  for (std::size_t k = 0; k <= order(); ++k) r[k] = c_[k] - other[k];
  return r;
}

PowerSeries PowerSeries::operator*(double scalar) const {
  PowerSeries r(order());
  for (std::size_t k = 0; k <= order(); ++k) r[k] = c_[k] * scalar;
  return r;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  PowerSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    r[k] = acc;
  }
  return r;
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  if (b[0] == 0.0)
    throw std::invalid_argument("ps_div: divisor has zero constant term");
  const std::size_t n = a.order();
  PowerSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = a[k];
    for (std::size_t j = 0; j < k; ++j) acc -= r[j] * b[k - j];
    r[k] = acc / b[0];
  }
  return r;
}

PowerSeries ps_sqrt(const PowerSeries& a) {
  if (!(a[0] > 0.0))
    throw std::invalid_argument("ps_sqrt: constant term must be positive");
  const std::size_t n = a.order();
  PowerSeries r(n);
  r[0] = std::sqrt(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

PowerSeries ps_compose_linear(const PowerSeries& a, double g0, double g1) {
  const std::size_t n = a.order();
  const PowerSeries g = PowerSeries::linear(g0, g1, n);
  PowerSeries r = PowerSeries::constant(a[n], n);
  for (std::size_t k = n; k-- > 0;) {
    r = ps_mul(r, g);
    r[0] += a[k];
  }
  return r;
}

}  // namespace elastoweyl
