#include "se3tangent/algebra.hpp"

#include <limits>
#include <stdexcept>

#include "se3tangent/so3.hpp"

namespace se3tan {

Mat4 hat(const Vec6& X) {
  Mat4 M = Mat4::Zero();
  M.topLeftCorner<3, 3>() = skew(rotation_part(X));
  M.topRightCorner<3, 1>() = translation_part(X);
  return M;
}

Vec6 unhat(const Mat4& M) {
  return screw(unskew(M.topLeftCorner<3, 3>()), M.topRightCorner<3, 1>());
}

Mat6 ad(const Vec6& X) {
  if (!X.allFinite()) throw std::invalid_argument("screw vector must be finite");
  const Mat3 sx = skew(rotation_part(X));
  Mat6 A = Mat6::Zero();
  A.topLeftCorner<3, 3>() = sx;
  A.bottomRightCorner<3, 3>() = sx;
  A.bottomLeftCorner<3, 3>() = skew(translation_part(X));
  return A;
}

std::vector<Mat6> ad_powers(const Vec6& X, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  std::vector<Mat6> P;
  P.reserve(static_cast<size_t>(kmax) + 1);
  P.push_back(Mat6::Identity());
  if (kmax == 0) return P;
  const Mat6 A = ad(X);
  for (int i = 1; i <= kmax; ++i) P.push_back(P.back() * A);
  return P;
}

Mat6 ad_bar(const Vec6& U) {
  if (!U.allFinite()) throw std::invalid_argument("screw vector must be finite");
  const Mat3 su = skew(rotation_part(U));
  const Mat3 sv = skew(translation_part(U));
  Mat6 M = Mat6::Zero();
  M.topLeftCorner<3, 3>() = su;
  M.topRightCorner<3, 3>() = sv;
  M.bottomLeftCorner<3, 3>() = sv;
  return M;
}

Mat6 adjoint_of_transform(const Transform& H) {
  Mat6 A = Mat6::Zero();
  A.topLeftCorner<3, 3>() = H.R;
  A.bottomRightCorner<3, 3>() = H.R;
  A.bottomLeftCorner<3, 3>() = skew(H.r) * H.R;
  return A;
}

double pitch(const Vec6& X) {
  const double p2 = rotation_part(X).squaredNorm();
  if (p2 == 0.0) {
    return translation_part(X).isZero() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return rotation_part(X).dot(translation_part(X)) / p2;
}

}  // namespace se3tan
