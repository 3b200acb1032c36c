#pragma once

#include "se3tangent/types.hpp"

namespace se3tan {

/// P_{i,j}(X, Z) = -P_j(X) ad(Z_{i-j-1}) with Z_m = ad(X)^m Z; building block
/// of the evaluation-map Jacobian series, satisfying
/// P_{i,j}(X, Z) U = P_j ad(U) P_{i-j-1} Z.  Requires 0 <= j < i.
Mat6 P_ij(const Vec6& X, const Vec6& Z, int i, int j);

/// Same matrix through the recursion
/// P_{i,j} = ad(X) P_{i-1,j} + P_j ad(Z_{i-j-2}) ad(X); requires j <= i - 2.
Mat6 P_ij_recursive(const Vec6& X, const Vec6& Z, int i, int j);

/// k-th order truncation of the dexp/dexpinv series (polynomial of degree k
/// in ad(X)); k <= 8.
Mat6 dexp_approx(const Vec6& X, int k, Variant variant = Variant::dexp);

/// k-th order truncations of the first directional derivative and of the
/// evaluation-map Jacobian.  k in [0, 3]; for dexpinv the order-2 truncation
/// coincides with order 1 (odd Bernoulli numbers vanish).
Mat6 ddexp_approx(const Vec6& X, const Vec6& U, int k, Variant variant = Variant::dexp);
Mat6 jac_eval_approx(const Vec6& X, const Vec6& Z, int k, Variant variant = Variant::dexp);

/// k-th order truncations of the second directional derivative and of the
/// Hessian of Q^T dexp_X Z.  k in {0, 1, 2} for dexp and {0, 2} for dexpinv;
/// there is no order-1 truncation of the inverse family.
Mat6 d2dexp_approx(const Vec6& X, const Vec6& U, const Vec6& S, int k,
                   Variant variant = Variant::dexp);
Mat6 hessian_approx(const Vec6& X, const Vec6& Q, const Vec6& Z, int k,
                    Variant variant = Variant::dexp);

/// Switching policy of the robust evaluators: exact closed form for
/// ||x|| > epsilon, k-th order truncation otherwise.  order = -1 selects the
/// highest order the target supports; explicit orders are clamped down to
/// the nearest supported one.
struct SwitchPolicy {
  double epsilon = 1e-4;
  int order = -1;
};

Mat6 robust_dexp(const Vec6& X, const SwitchPolicy& policy, Variant variant = Variant::dexp);
Mat6 robust_ddexp(const Vec6& X, const Vec6& U, const SwitchPolicy& policy,
                  Variant variant = Variant::dexp);
Mat6 robust_jac_eval(const Vec6& X, const Vec6& Z, const SwitchPolicy& policy,
                     Variant variant = Variant::dexp);
Mat6 robust_d2dexp(const Vec6& X, const Vec6& U, const Vec6& S, const SwitchPolicy& policy,
                   Variant variant = Variant::dexp);
Mat6 robust_hessian(const Vec6& X, const Vec6& Q, const Vec6& Z, const SwitchPolicy& policy,
                    Variant variant = Variant::dexp);

}  // namespace se3tan
