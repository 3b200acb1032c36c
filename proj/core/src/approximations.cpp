#include "se3tangent/approximations.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "se3tangent/algebra.hpp"
#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/jacobians.hpp"

namespace se3tan {
namespace {

std::vector<Vec6> z_chain(const Vec6& X, const Vec6& Z, int n) {
  const Mat6 A = ad(X);
  std::vector<Vec6> Zi(static_cast<size_t>(n) + 1);
  Zi[0] = Z;
  for (int i = 1; i <= n; ++i) Zi[i] = A * Zi[i - 1];
  return Zi;
}

void check_first_order(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("approximation order must lie in [0, 3]");
}

void check_second_order(int k, Variant variant) {
  if (k < 0 || k > 2) throw std::invalid_argument("approximation order must lie in [0, 2]");
  if (variant == Variant::dexpinv && k == 1)
    throw std::invalid_argument("the inverse family has no order-1 second-derivative truncation");
}

int clamp_order(int requested, int max_order, Variant variant, bool second_family) {
  int k = (requested < 0) ? max_order : std::min(requested, max_order);
  if (second_family && variant == Variant::dexpinv && k == 1) k = 0;
  return k;
}

}  // namespace

Mat6 P_ij(const Vec6& X, const Vec6& Z, int i, int j) {
  if (j < 0 || j >= i) throw std::invalid_argument("P_ij requires 0 <= j < i");
  const auto P = ad_powers(X, j);
  const auto Zi = z_chain(X, Z, i - j - 1);
  return -P[static_cast<size_t>(j)] * ad(Zi[static_cast<size_t>(i - j - 1)]);
}

Mat6 P_ij_recursive(const Vec6& X, const Vec6& Z, int i, int j) {
  if (j < 0 || j > i - 2) throw std::invalid_argument("recursion requires 0 <= j <= i - 2");
  const Mat6 A = ad(X);
  const auto P = ad_powers(X, j);
  const auto Zi = z_chain(X, Z, i - j - 2);
  return A * P_ij(X, Z, i - 1, j) +
         P[static_cast<size_t>(j)] * ad(Zi[static_cast<size_t>(i - j - 2)]) * A;
}

Mat6 dexp_approx(const Vec6& X, int k, Variant variant) {
  if (k < 0 || k > 8) throw std::invalid_argument("approximation order must lie in [0, 8]");
  return dexp_series(X, variant, k);
}

Mat6 ddexp_approx(const Vec6& X, const Vec6& U, int k, Variant variant) {
  check_first_order(k);
  Mat6 M = Mat6::Zero();
  for (int i = 1; i <= k + 1; ++i) {
    const double w = series_weight(variant, i);
    if (w != 0.0) M += w * dP(X, U, i);
  }
  return M;
}

Mat6 jac_eval_approx(const Vec6& X, const Vec6& Z, int k, Variant variant) {
  check_first_order(k);
  const auto P = ad_powers(X, k);
  const auto Zi = z_chain(X, Z, k);
  Mat6 M = Mat6::Zero();
  for (int i = 1; i <= k + 1; ++i) {
    const double w = series_weight(variant, i);
    if (w == 0.0) continue;
    Mat6 s = Mat6::Zero();
    for (int j = 0; j < i; ++j)
      s -= P[static_cast<size_t>(j)] * ad(Zi[static_cast<size_t>(i - j - 1)]);
    M += w * s;
  }
  return M;
}

Mat6 d2dexp_approx(const Vec6& X, const Vec6& U, const Vec6& S, int k, Variant variant) {
  check_second_order(k, variant);
  Mat6 M = Mat6::Zero();
  for (int i = 2; i <= k + 2; ++i) {
    const double w = series_weight(variant, i);
    if (w != 0.0) M += w * d2P(X, U, S, i);
  }
  return M;
}

Mat6 hessian_approx(const Vec6& X, const Vec6& Q, const Vec6& Z, int k, Variant variant) {
  check_second_order(k, variant);
  const auto P = ad_powers(X, k);
  const auto Zi = z_chain(X, Z, k);
  std::vector<Vec6> Qi(static_cast<size_t>(k) + 1);
  Qi[0] = Q;
  const Mat6 AT = ad(X).transpose();
  for (int i = 1; i <= k; ++i) Qi[static_cast<size_t>(i)] = AT * Qi[static_cast<size_t>(i - 1)];
  Mat6 H = Mat6::Zero();
  for (int i = 2; i <= k + 2; ++i) {
    const double w = series_weight(variant, i);
    if (w == 0.0) continue;
    Mat6 Hb = Mat6::Zero();
    for (int j = 1; j < i; ++j)
      for (int l = 0; l < j; ++l)
        Hb += ad_bar(Qi[static_cast<size_t>(i - j - 1)]) * P[static_cast<size_t>(l)] *
              ad(Zi[static_cast<size_t>(j - l - 1)]);
    H += w * (Hb + Hb.transpose());
  }
  return H;
}

Mat6 robust_dexp(const Vec6& X, const SwitchPolicy& policy, Variant variant) {
  if (!(policy.epsilon > 0.0)) throw std::invalid_argument("switch threshold must be positive");
  if (rotation_part(X).norm() > policy.epsilon)
    return variant == Variant::dexp ? dexp(X) : dexpinv(X);
  const int k = clamp_order(policy.order, 3, variant, false);
  return dexp_approx(X, k, variant);
}

Mat6 robust_ddexp(const Vec6& X, const Vec6& U, const SwitchPolicy& policy, Variant variant) {
  if (!(policy.epsilon > 0.0)) throw std::invalid_argument("switch threshold must be positive");
  if (rotation_part(X).norm() > policy.epsilon) return ddexp(X, U, variant);
  return ddexp_approx(X, U, clamp_order(policy.order, 3, variant, false), variant);
}

Mat6 robust_jac_eval(const Vec6& X, const Vec6& Z, const SwitchPolicy& policy, Variant variant) {
  if (!(policy.epsilon > 0.0)) throw std::invalid_argument("switch threshold must be positive");
  if (rotation_part(X).norm() > policy.epsilon)
    return jac_eval(X, Z, variant == Variant::dexp ? EvalVariant::dexp : EvalVariant::dexpinv);
  return jac_eval_approx(X, Z, clamp_order(policy.order, 3, variant, false), variant);
}

Mat6 robust_d2dexp(const Vec6& X, const Vec6& U, const Vec6& S, const SwitchPolicy& policy,
                   Variant variant) {
  if (!(policy.epsilon > 0.0)) throw std::invalid_argument("switch threshold must be positive");
  if (rotation_part(X).norm() > policy.epsilon) return d2dexp(X, U, S, variant);
  return d2dexp_approx(X, U, S, clamp_order(policy.order, 2, variant, true), variant);
}

Mat6 robust_hessian(const Vec6& X, const Vec6& Q, const Vec6& Z, const SwitchPolicy& policy,
                    Variant variant) {
  if (!(policy.epsilon > 0.0)) throw std::invalid_argument("switch threshold must be positive");
  if (rotation_part(X).norm() > policy.epsilon) return hessian_eval(X, Q, Z, variant);
  return hessian_approx(X, Q, Z, clamp_order(policy.order, 2, variant, true), variant);
}

}  // namespace se3tan
