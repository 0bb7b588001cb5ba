#pragma once

#include <utility>

namespace elastoweyl {

enum class Boundary { dirichlet, free_boundary };

enum class AdmissibilityMode {
  standard,  // mu > 0 and d*lambda + 2*mu > 0
  extended,  // mu > 0 and lambda + mu > 0, i.e. alpha in (0, 1)
};

// Homogeneous isotropic elastic medium in dimension d >= 2, described by
// the Lame parameters (lambda, mu).  The dimensionless ratio
//     alpha = mu / (lambda + 2 mu)
// is the square of the shear-to-pressure wave speed ratio and is the only
// material parameter the rescaled boundary coefficients depend on.
//
// Standard admissibility (positive-definite stored energy) forces
// alpha in (0, d / (2(d-1))); the extended window lambda + mu > 0 allows
// any alpha in (0, 1), which is the natural domain of every formula in
// this library.
class Material {
 public:
  // Throws std::invalid_argument if (lambda, mu, dim) violates the chosen
  // admissibility mode.
  Material(double lambda, double mu, int dim,
           AdmissibilityMode mode = AdmissibilityMode::standard);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  int dim() const { return dim_; }
  double alpha() const { return alpha_; }

  // (c_p, c_s) = (sqrt(lambda + 2 mu), sqrt(mu)); c_p/c_s = alpha^{-1/2}.
  std::pair<double, double> wave_speeds() const;

 private:
  double lambda_;
  double mu_;
  int dim_;
  double alpha_;
};

// Convenience: the material with mu = 1 and the given alpha in (0, 1),
// i.e. lambda = 1/alpha - 2 (extended admissibility).
Material material_from_alpha(double alpha, int dim, double mu = 1.0);

}  // namespace elastoweyl
