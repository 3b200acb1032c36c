#pragma once

#include <Eigen/Dense>

namespace se3tan {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Screw coordinate vectors stack the rotation part on top of the
/// translation part: X = (x, y) with x the Rodrigues vector.
inline Vec3 rotation_part(const Vec6& X) { return X.head<3>(); }
inline Vec3 translation_part(const Vec6& X) { return X.tail<3>(); }

inline Vec6 screw(const Vec3& x, const Vec3& y) {
  Vec6 X;
  X << x, y;
  return X;
}

/// Rigid transform (R, r), stored without the constant bottom row.
struct Transform {
  Mat3 R = Mat3::Identity();
  Vec3 r = Vec3::Zero();

  Mat4 matrix() const {
    Mat4 H = Mat4::Identity();
    H.topLeftCorner<3, 3>() = R;
    H.topRightCorner<3, 1>() = r;
    return H;
  }

  Transform operator*(const Transform& other) const {
    return Transform{R * other.R, R * other.r + r};
  }

  Transform inverse() const { return Transform{R.transpose(), -(R.transpose() * r)}; }

  static Transform Identity() { return Transform{}; }
};

/// Selects between the tangent operator and its inverse.
enum class Variant { dexp, dexpinv };

/// Evaluation maps whose Jacobian is available in closed form.
enum class EvalVariant { dexp, dexpinv, dexpT };

}  // namespace se3tan
