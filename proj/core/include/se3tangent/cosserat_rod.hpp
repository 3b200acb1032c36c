#pragma once

#include <vector>

#include "se3tangent/approximations.hpp"
#include "se3tangent/types.hpp"

namespace se3tan {

/// Straight rubber rod with constant rectangular cross section; lengths in
/// mm, moduli in MPa.
struct RodConfig {
  double length = 100.0;
  double width = 8.0;
  double height = 8.0;
  double youngs_modulus = 10.0;
  double shear_modulus = 0.3;

  double area() const { return width * height; }
  double area_moment_yy() const { return width * height * height * height / 12.0; }
  double area_moment_zz() const { return height * width * width * width / 12.0; }
  double polar_moment() const { return area_moment_yy() + area_moment_zz(); }

  /// K = (1/L) diag(G Jx, E Iyy, E Izz, E A, G A, G A).
  Mat6 stiffness() const;
};

struct PrescribedDisplacement {
  Vec3 x;    ///< Rodrigues vector of the cross-section frame
  Vec3 rho;  ///< shear/compression part of the deformation
};

/// The prescribed displacement field of the demo rod; tau in [0, 1].
PrescribedDisplacement prescribed_displacement(double tau);

struct RodSample {
  double tau;
  Vec6 X, Xd, Xdd, Xddd;
};

/// Reference screw-coordinate field of the prescribed rod displacement:
/// R = exp(x), r by fixed-step 4th-order quadrature of r' = R rho, followed
/// by the SE(3) logarithm; arc-length derivatives by high-order central
/// differences on the cached field.
class RodReference {
 public:
  explicit RodReference(int quadrature_steps = 2000);

  Transform pose(double tau) const;
  Vec6 screw(double tau) const;
  RodSample sample(double tau) const;
  std::vector<RodSample> build_reference(const std::vector<double>& grid) const;

  /// Deformation through the definition: kappa = unskew(R^T R') with R'
  /// from arc-length differences, rho prescribed.  Independent of the dexp
  /// machinery.
  Vec6 deformation_direct(double tau) const;

 private:
  Vec3 integrated_translation(double tau) const;

  double step_;
  std::vector<Vec3> r_nodes_;
  double cache_start_;
};

/// Deformation measure chi = dexp_{-X} X'.
Vec6 deformation(const Vec6& X, const Vec6& Xd);
Vec6 deformation(const Vec6& X, const Vec6& Xd, const SwitchPolicy& policy);

struct DeformationRates {
  Vec6 chi_d;
  Vec6 chi_dd;
};

/// First and second arc-length derivative of the deformation.
DeformationRates deformation_rates(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                   const Vec6& Xddd);
DeformationRates deformation_rates(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                   const Vec6& Xddd, const SwitchPolicy& policy);
/// Literal closed-form evaluation without series kernels; diverges near
/// ||x|| = 0 (artifact demo path).
DeformationRates deformation_rates_naive(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                         const Vec6& Xddd);

/// d chi / d X for chi(X) = dexp_{-X} Xd with Xd held fixed.  All signs of
/// the -X argument chain are centralized here.
Mat6 deformation_jacobian(const Vec6& X, const Vec6& Xd);
Mat6 deformation_jacobian(const Vec6& X, const Vec6& Xd, const SwitchPolicy& policy);

/// Gradient and Hessian of the elastic potential density
/// 0.5 (chi - chi0)^T K (chi - chi0) with respect to X.
Vec6 potential_gradient(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K);
Vec6 potential_gradient(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K,
                        const SwitchPolicy& policy);
Mat6 potential_hessian(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K);
Mat6 potential_hessian(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K,
                       const SwitchPolicy& policy);
Vec6 potential_gradient_naive(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K);
Mat6 potential_hessian_naive(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K);

}  // namespace se3tan
