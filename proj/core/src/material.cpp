#include "elastoweyl/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elastoweyl {

Material::Material(double lambda, double mu, int dim, AdmissibilityMode mode)
    : lambda_(lambda), mu_(mu), dim_(dim) {
  if (dim < 2) throw std::invalid_argument("Material: dimension must be >= 2");
  if (!std::isfinite(lambda) || !std::isfinite(mu))
    throw std::invalid_argument("Material: Lame parameters must be finite");
  if (!(mu > 0.0)) throw std::invalid_argument("Material: mu must be > 0");
  if (mode == AdmissibilityMode::standard) {
    if (!(dim * lambda + 2.0 * mu > 0.0))
      throw std::invalid_argument(
          "Material: standard admissibility requires d*lambda + 2*mu > 0 "
          "(got " +
          std::to_string(dim * lambda + 2.0 * mu) + ")");
  } else {
    if (!(lambda + mu > 0.0))
      throw std::invalid_argument(
          "Material: extended admissibility requires lambda + mu > 0 (got " +
          std::to_string(lambda + mu) + ")");
  }
  alpha_ = mu / (lambda + 2.0 * mu);
  if (!(alpha_ > 0.0 && alpha_ < 1.0))
    throw std::invalid_argument("Material: alpha = mu/(lambda+2mu) = " +
                                std::to_string(alpha_) +
                                " falls outside (0, 1)");
}

std::pair<double, double> Material::wave_speeds() const {
  return {std::sqrt(lambda_ + 2.0 * mu_), std::sqrt(mu_)};
}

Material material_from_alpha(double alpha, int dim, double mu) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("material_from_alpha: alpha must be in (0,1)");
  return Material(mu * (1.0 / alpha - 2.0), mu, dim,
                  AdmissibilityMode::extended);
}

}  // namespace elastoweyl
