#pragma once

#include "se3tangent/types.hpp"

namespace se3tan {

/// Block-partitioned 3x3 formulation of exp, dexp and their first
/// directional derivatives, kept deliberately independent of the 6x6
/// machinery; used for cross-validation only.
struct BlockTangent {
  Mat3 diag;     ///< dexp_x (or its inverse)
  Mat3 offdiag;  ///< (D_x dexp)(y) block

  Mat6 assemble() const {
    Mat6 M = Mat6::Zero();
    M.topLeftCorner<3, 3>() = diag;
    M.bottomRightCorner<3, 3>() = diag;
    M.bottomLeftCorner<3, 3>() = offdiag;
    return M;
  }
};

/// Screw-pitch form of the exponential,
/// exp(X) = [[R, (I - R)~x y / ||x||^2 + h y], [0, 1]].
Transform exp_block(const Vec6& X);

/// Directional derivative of the SO(3) tangent operator along y,
/// (D_x dexp)(y) resp. (D_x dexpinv)(y).
Mat3 ddexp_so3_block(const Vec3& x, const Vec3& y, Variant variant = Variant::dexp);

/// dexp_X (or its inverse) assembled from the two 3x3 blocks.
BlockTangent dexp_block(const Vec6& X, Variant variant = Variant::dexp);

/// First directional derivative of dexp_X along U in block form.
Mat6 ddexp_block(const Vec6& X, const Vec6& U, Variant variant = Variant::dexp);

}  // namespace se3tan
