#pragma once

#include "se3tangent/types.hpp"

namespace se3tan {

/// Structural switch threshold on ||x||: below it dexp/dexpinv fall back to
/// their k=3 truncations, whose error is far below double roundoff there.
inline constexpr double kDexpSwitchEps = 1e-4;

/// Exponential map, evaluated through the cubic matrix polynomial
/// exp(Xhat) = I + Xhat + (beta/2) Xhat^2 + delta Xhat^3.
Transform exp_se3(const Vec6& X);

/// Principal logarithm: x = log R, y = dexpinv_x * r.
Vec6 log_se3(const Transform& H);

/// 6x6 tangent operator of exp on SE(3) and its inverse, evaluated in the
/// normalized ad_N form with series-kernel coefficients.
Mat6 dexp(const Vec6& X, double eps_switch = kDexpSwitchEps);
Mat6 dexpinv(const Vec6& X, double eps_switch = kDexpSwitchEps);

/// Truncated defining series sum_{i=0}^{order} w_i ad^i with w_i = 1/(i+1)!
/// for dexp and w_i = B_i/i! for the inverse (exact-rational Bernoulli
/// numbers).  Order is capped at 60; independent oracle for the closed forms.
Mat6 dexp_series(const Vec6& X, Variant variant, int order);

/// Series weight w_i as above, for reuse by the approximation generators.
double series_weight(Variant variant, int i);

}  // namespace se3tan
