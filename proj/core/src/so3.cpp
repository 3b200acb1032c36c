#include "se3tangent/so3.hpp"

#include <cmath>
#include <stdexcept>

#include "se3tangent/scalar_coeffs.hpp"

namespace se3tan {
namespace {

void check_finite(const Vec3& x) {
  if (!x.allFinite()) throw std::invalid_argument("rotation vector must be finite");
}

}  // namespace

Mat3 skew(const Vec3& v) {
  Mat3 M;
  M << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return M;
}

Vec3 unskew(const Mat3& M) { return Vec3(M(2, 1), M(0, 2), M(1, 0)); }

Mat3 exp_so3(const Vec3& x) {
  check_finite(x);
  const double phi = x.norm();
  const BaseCoeffs c = base_coeffs(phi);
  const Mat3 sx = skew(x);
  return Mat3::Identity() + c.alpha * sx + 0.5 * c.beta * (sx * sx);
}

Mat3 dexp_so3(const Vec3& x) {
  check_finite(x);
  const double phi = x.norm();
  const BaseCoeffs c = base_coeffs(phi);
  const Mat3 sx = skew(x);
  if (phi == 0.0) return Mat3::Identity();
  const Mat3 sn = sx / phi;
  return Mat3::Identity() + 0.5 * c.beta * sx + (1.0 - c.alpha) * (sn * sn);
}

Mat3 dexpinv_so3(const Vec3& x) {
  check_finite(x);
  const double phi = x.norm();
  const BaseCoeffs c = base_coeffs(phi);
  const Mat3 sx = skew(x);
  if (phi == 0.0) return Mat3::Identity();
  const Mat3 sn = sx / phi;
  return Mat3::Identity() - 0.5 * sx + (1.0 - c.gamma) * (sn * sn);
}

Vec3 log_so3(const Mat3& R) {
  if (!R.allFinite()) throw std::invalid_argument("rotation matrix must be finite");
  if ((R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("matrix is not orthonormal");
  const double pi = 3.14159265358979323846;
  const double c = std::clamp(0.5 * (R.trace() - 1.0), -1.0, 1.0);
  const double phi = std::acos(c);
  if (phi > pi - 1e-6)
    throw std::domain_error("rotation angle too close to pi for the principal logarithm");
  const Vec3 w = unskew(0.5 * (R - R.transpose()));  // = sin(phi) * axis
  if (phi < 1e-9) return w;  // sin(phi)/phi == 1 to machine precision
  return (phi / std::sin(phi)) * w;
}

}  // namespace se3tan
