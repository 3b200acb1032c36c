#pragma once

#include <vector>

#include "se3tangent/types.hpp"

namespace se3tan {

/// se(3) matrix of a screw vector, [[~x, y], [0, 0]].
Mat4 hat(const Vec6& X);
Vec6 unhat(const Mat4& M);

/// 6x6 adjoint operator matrix [[~x, 0], [~y, ~x]]; ad(X)*Z is the Lie
/// bracket [X, Z] in vector form.
Mat6 ad(const Vec6& X);

/// Powers P_0 = I, P_i = ad(X)^i up to kmax.
std::vector<Mat6> ad_powers(const Vec6& X, int kmax);

/// Skew-symmetric coadjoint matrix [[~u, ~v], [~v, 0]] defined by
/// ad(X)^T U = ad_bar(U) X.
Mat6 ad_bar(const Vec6& U);

/// Adjoint of a rigid transform, [[R, 0], [~r R, R]].
Mat6 adjoint_of_transform(const Transform& H);

/// Instantaneous pitch x^T y / ||x||^2 of a screw; infinity for x = 0, y != 0.
double pitch(const Vec6& X);

}  // namespace se3tan
