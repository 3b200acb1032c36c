#pragma once

#include "se3tangent/types.hpp"

namespace se3tan {

Mat3 skew(const Vec3& v);
Vec3 unskew(const Mat3& M);

/// Euler-Rodrigues formula R = I + alpha*~x + (beta/2)*~x^2.
Mat3 exp_so3(const Vec3& x);

/// Right-trivialized differential on SO(3) and its inverse, in the
/// normalized form that stays finite for ||x|| -> 0.
Mat3 dexp_so3(const Vec3& x);
Mat3 dexpinv_so3(const Vec3& x);

/// Principal logarithm.  Rejects rotations within 1e-6 of the antipode
/// (std::domain_error) and non-orthonormal input beyond 1e-9
/// (std::invalid_argument).
Vec3 log_so3(const Mat3& R);

}  // namespace se3tan
