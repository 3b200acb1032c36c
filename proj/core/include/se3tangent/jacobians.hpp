#pragma once

#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/types.hpp"

namespace se3tan {

/// Jacobian of the evaluation map f(X) = dexp_X Z (or dexpinv_X Z, or
/// dexp_X^T Z) with respect to X, for fixed Z:
///   jac_eval(X, Z, v) * U == ddexp(X, U, v) * Z  (resp. transposed) for all U.
/// Limits at X = 0: -ad(Z)/2, +ad(Z)/2, +ad_bar(Z)/2.
Mat6 jac_eval(const Vec6& X, const Vec6& Z, EvalVariant variant = EvalVariant::dexp);

/// Hessian of the scalar map h(X) = Q^T dexp_X Z (or with dexpinv), i.e. the
/// symmetric matrix H with S^T H U = Q^T d2dexp(X, U, S) Z. Assembled from
/// the H1/H2/H3 decomposition and symmetrized.
Mat6 hessian_eval(const Vec6& X, const Vec6& Q, const Vec6& Z,
                  Variant variant = Variant::dexp);

/// Assemblies with an explicit coefficient set (see derivatives.hpp).
Mat6 jac_eval_from_coeffs(const Vec6& X, const Vec6& Z, const DexpCoeffs& c,
                          const DexpCoeffDerivs& d, EvalVariant variant);
Mat6 hessian_eval_from_coeffs(const Vec6& X, const Vec6& Q, const Vec6& Z, const DexpCoeffs& c,
                              const DexpCoeffDerivs& d, Variant variant);

}  // namespace se3tan
