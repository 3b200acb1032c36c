#include "se3tangent/cosserat_rod.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/jacobians.hpp"
#include "se3tangent/so3.hpp"

namespace se3tan {
namespace {

constexpr double kPi = 3.14159265358979323846;

// The reference field has to be sampled slightly outside [0, 1] by the
// arc-length difference stencils.
constexpr double kCacheMargin = 0.064;

// Per-derivative stencil steps.  The third derivative divides the ~1e-14
// quadrature/log noise by h^3, so its step is the coarsest.
constexpr double kStepFirst = 1e-4;
constexpr double kStepSecond = 1e-3;
constexpr double kStepThird = 5e-3;

// 6th-order central weights for f', f'' (7 points) and f''' (9 points).
constexpr double kW1[7] = {-1.0 / 60, 9.0 / 60, -45.0 / 60, 0.0, 45.0 / 60, -9.0 / 60, 1.0 / 60};
constexpr double kW2[7] = {2.0 / 180,  -27.0 / 180, 270.0 / 180, -490.0 / 180,
                           270.0 / 180, -27.0 / 180, 2.0 / 180};
constexpr double kW3[9] = {-7.0 / 240, 3.0 / 10,  -169.0 / 120, 61.0 / 30, 0.0,
                           -61.0 / 30, 169.0 / 120, -3.0 / 10,   7.0 / 240};

Vec3 rod_x(double tau) {
  const double s2 = std::sin(2.0 * kPi * tau);
  return Vec3(0.5 * s2, 0.5 * std::cos(kPi * tau), 0.5 * s2);
}

Vec3 rod_rho(double tau) {
  const double s = std::sin(2.0 * kPi * tau);
  const double a = 0.1 * s;
  return Vec3(std::cos(a), std::sin(a) * std::cos(s), std::sin(a) * std::sin(s));
}

Vec3 slope(double tau) { return exp_so3(rod_x(tau)) * rod_rho(tau); }

}  // namespace

Mat6 RodConfig::stiffness() const {
  Mat6 K = Mat6::Zero();
  K(0, 0) = shear_modulus * polar_moment();
  K(1, 1) = youngs_modulus * area_moment_yy();
  K(2, 2) = youngs_modulus * area_moment_zz();
  K(3, 3) = youngs_modulus * area();
  K(4, 4) = shear_modulus * area();
  K(5, 5) = shear_modulus * area();
  return K / length;
}

PrescribedDisplacement prescribed_displacement(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in [0, 1]");
  return PrescribedDisplacement{rod_x(tau), rod_rho(tau)};
}

RodReference::RodReference(int quadrature_steps) {
  if (quadrature_steps < 10) throw std::invalid_argument("quadrature grid too coarse");
  step_ = 1.0 / quadrature_steps;
  const int margin_nodes = static_cast<int>(std::ceil(kCacheMargin / step_));
  cache_start_ = -margin_nodes * step_;
  const int n = quadrature_steps + 2 * margin_nodes;
  r_nodes_.resize(static_cast<size_t>(n) + 1);

  // r(0) = 0; integrate r' = R rho with the classical 4th-order scheme in
  // both directions from tau = 0.
  const int i0 = margin_nodes;
  r_nodes_[static_cast<size_t>(i0)] = Vec3::Zero();
  auto rk4 = [](const Vec3& r, double t, double h) {
    const Vec3 k1 = slope(t);
    const Vec3 k23 = slope(t + 0.5 * h);
    const Vec3 k4 = slope(t + h);
    return Vec3(r + h / 6.0 * (k1 + 4.0 * k23 + k4));
  };
  for (int i = i0; i + 1 <= n; ++i)
    r_nodes_[static_cast<size_t>(i + 1)] = rk4(r_nodes_[static_cast<size_t>(i)], cache_start_ + i * step_, step_);
  for (int i = i0; i - 1 >= 0; --i)
    r_nodes_[static_cast<size_t>(i - 1)] = rk4(r_nodes_[static_cast<size_t>(i)], cache_start_ + i * step_, -step_);
}

Vec3 RodReference::integrated_translation(double tau) const {
  const double rel = (tau - cache_start_) / step_;
  int i = static_cast<int>(std::floor(rel));
  i = std::max(0, std::min(i, static_cast<int>(r_nodes_.size()) - 1));
  const double t0 = cache_start_ + i * step_;
  const double dt = tau - t0;
  if (dt == 0.0) return r_nodes_[static_cast<size_t>(i)];
  const Vec3 k1 = slope(t0);
  const Vec3 k23 = slope(t0 + 0.5 * dt);
  const Vec3 k4 = slope(t0 + dt);
  return r_nodes_[static_cast<size_t>(i)] + dt / 6.0 * (k1 + 4.0 * k23 + k4);
}

Transform RodReference::pose(double tau) const {
  return Transform{exp_so3(rod_x(tau)), integrated_translation(tau)};
}

Vec6 RodReference::screw(double tau) const { return log_se3(pose(tau)); }

RodSample RodReference::sample(double tau) const {
  RodSample s;
  s.tau = tau;
  s.X = screw(tau);
  s.Xd = Vec6::Zero();
  s.Xdd = Vec6::Zero();
  s.Xddd = Vec6::Zero();
  for (int j = -3; j <= 3; ++j) {
    if (kW1[j + 3] != 0.0) s.Xd += kW1[j + 3] * screw(tau + j * kStepFirst);
    s.Xdd += kW2[j + 3] * screw(tau + j * kStepSecond);
  }
  s.Xd /= kStepFirst;
  s.Xdd /= (kStepSecond * kStepSecond);
  for (int j = -4; j <= 4; ++j) {
    if (kW3[j + 4] != 0.0) s.Xddd += kW3[j + 4] * screw(tau + j * kStepThird);
  }
  s.Xddd /= (kStepThird * kStepThird * kStepThird);
  return s;
}

std::vector<RodSample> RodReference::build_reference(const std::vector<double>& grid) const {
  std::vector<RodSample> out;
  out.reserve(grid.size());
  for (double tau : grid) out.push_back(sample(tau));
  return out;
}

Vec6 RodReference::deformation_direct(double tau) const {
  const double h = 1e-4;
  Mat3 Rd = Mat3::Zero();
  for (int j = -3; j <= 3; ++j) {
    if (kW1[j + 3] != 0.0) Rd += kW1[j + 3] * exp_so3(rod_x(tau + j * h));
  }
  Rd /= h;
  const Mat3 R = exp_so3(rod_x(tau));
  return se3tan::screw(unskew(R.transpose() * Rd), rod_rho(tau));
}

Vec6 deformation(const Vec6& X, const Vec6& Xd) { return dexp(-X) * Xd; }

Vec6 deformation(const Vec6& X, const Vec6& Xd, const SwitchPolicy& policy) {
  return robust_dexp(-X, policy) * Xd;
}

DeformationRates deformation_rates(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                   const Vec6& Xddd) {
  const Mat6 D = dexp(-X);
  const Mat6 Dd = ddexp(-X, Xd);
  DeformationRates out;
  out.chi_d = D * Xdd - Dd * Xd;
  out.chi_dd = D * Xddd - 2.0 * (Dd * Xdd) - ddexp(-X, Xdd) * Xd + d2dexp(-X, Xd, Xd) * Xd;
  return out;
}

DeformationRates deformation_rates(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                   const Vec6& Xddd, const SwitchPolicy& policy) {
  const Mat6 D = robust_dexp(-X, policy);
  const Mat6 Dd = robust_ddexp(-X, Xd, policy);
  DeformationRates out;
  out.chi_d = D * Xdd - Dd * Xd;
  out.chi_dd = D * Xddd - 2.0 * (Dd * Xdd) - robust_ddexp(-X, Xdd, policy) * Xd +
               robust_d2dexp(-X, Xd, Xd, policy) * Xd;
  return out;
}

namespace {

bool naive_broke(const DexpCoeffs& c, const DexpCoeffDerivs& d) {
  return !(std::isfinite(c.a1) && std::isfinite(c.a2) && std::isfinite(c.a3) &&
           std::isfinite(c.a4) && std::isfinite(c.b2) && std::isfinite(c.b4) &&
           std::isfinite(d.abar1) && std::isfinite(d.abar2) && std::isfinite(d.abar3) &&
           std::isfinite(d.abar4) && std::isfinite(d.bbar2) && std::isfinite(d.bbar4) &&
           std::isfinite(d.abreve1) && std::isfinite(d.abreve2) && std::isfinite(d.abreve3) &&
           std::isfinite(d.abreve4) && std::isfinite(d.bbreve2) && std::isfinite(d.bbreve4));
}

const double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

DeformationRates deformation_rates_naive(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                         const Vec6& Xddd) {
  const double phi = rotation_part(X).norm();
  const DexpCoeffs c = dexp_coeffs_naive(phi);
  const DexpCoeffDerivs d = dexp_coeff_derivs_naive(phi);
  if (naive_broke(c, d)) return DeformationRates{Vec6::Constant(kNan), Vec6::Constant(kNan)};
  const Mat6 D = dexp_from_coeffs(-X, c, Variant::dexp);
  const Mat6 Dd = ddexp_from_coeffs(-X, Xd, c, d, Variant::dexp);
  DeformationRates out;
  out.chi_d = D * Xdd - Dd * Xd;
  out.chi_dd = D * Xddd - 2.0 * (Dd * Xdd) - ddexp_from_coeffs(-X, Xdd, c, d, Variant::dexp) * Xd +
               d2dexp_from_coeffs(-X, Xd, Xd, c, d, Variant::dexp) * Xd;
  return out;
}

Mat6 deformation_jacobian(const Vec6& X, const Vec6& Xd) {
  // chi(X) = dexp_{-X} Xd, so d chi / dX = -(d/dY dexp_Y Xd)|_{Y=-X}.
  return -jac_eval(-X, Xd, EvalVariant::dexp);
}

Mat6 deformation_jacobian(const Vec6& X, const Vec6& Xd, const SwitchPolicy& policy) {
  return -robust_jac_eval(-X, Xd, policy, Variant::dexp);
}

Vec6 potential_gradient(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K) {
  const Vec6 e = deformation(X, Xd) - chi0;
  return deformation_jacobian(X, Xd).transpose() * (K * e);
}

Vec6 potential_gradient(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K,
                        const SwitchPolicy& policy) {
  const Vec6 e = deformation(X, Xd, policy) - chi0;
  return deformation_jacobian(X, Xd, policy).transpose() * (K * e);
}

Mat6 potential_hessian(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K) {
  const Vec6 a = K * (deformation(X, Xd) - chi0);
  const Mat6 J = deformation_jacobian(X, Xd);
  // The Hessian of a^T dexp_{-X} Xd in X equals the Hessian in Y = -X: the
  // two argument sign flips cancel.
  return hessian_eval(-X, a, Xd, Variant::dexp) + J.transpose() * K * J;
}

Mat6 potential_hessian(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K,
                       const SwitchPolicy& policy) {
  const Vec6 a = K * (deformation(X, Xd, policy) - chi0);
  const Mat6 J = deformation_jacobian(X, Xd, policy);
  return robust_hessian(-X, a, Xd, policy, Variant::dexp) + J.transpose() * K * J;
}

Vec6 potential_gradient_naive(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K) {
  const double phi = rotation_part(X).norm();
  const DexpCoeffs c = dexp_coeffs_naive(phi);
  const DexpCoeffDerivs d = dexp_coeff_derivs_naive(phi);
  if (naive_broke(c, d)) return Vec6::Constant(kNan);
  const Vec6 e = dexp_from_coeffs(-X, c, Variant::dexp) * Xd - chi0;
  const Mat6 J = -jac_eval_from_coeffs(-X, Xd, c, d, EvalVariant::dexp);
  return J.transpose() * (K * e);
}

Mat6 potential_hessian_naive(const Vec6& X, const Vec6& Xd, const Vec6& chi0, const Mat6& K) {
  const double phi = rotation_part(X).norm();
  const DexpCoeffs c = dexp_coeffs_naive(phi);
  const DexpCoeffDerivs d = dexp_coeff_derivs_naive(phi);
  if (naive_broke(c, d)) return Mat6::Constant(kNan);
  const Vec6 e = dexp_from_coeffs(-X, c, Variant::dexp) * Xd - chi0;
  if (!e.allFinite()) return Mat6::Constant(kNan);
  const Vec6 a = K * e;
  const Mat6 J = -jac_eval_from_coeffs(-X, Xd, c, d, EvalVariant::dexp);
  return hessian_eval_from_coeffs(-X, a, Xd, c, d, Variant::dexp) + J.transpose() * K * J;
}

}  // namespace se3tan
