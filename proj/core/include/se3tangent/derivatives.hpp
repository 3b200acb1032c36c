#pragma once

#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/types.hpp"

namespace se3tan {

/// Directional derivative of P_i = ad(X)^i along U:
///   (D P_i)(U) = sum_{j=0}^{i-1} P_j ad(U) P_{i-j-1},  i in [1, 4].
Mat6 dP(const Vec6& X, const Vec6& U, int i);

/// Second directional derivative of P_i, bilinear and symmetric in (U, S):
///   (D^2 P_i)(U)(S) = sum_{j=1}^{i-1} [ (D P_j)(S) ad(U) P_{i-j-1}
///                                      + P_{i-j-1} ad(U) (D P_j)(S) ],
/// i in [2, 4].
Mat6 d2P(const Vec6& X, const Vec6& U, const Vec6& S, int i);

/// First directional derivative of dexp (or dexpinv) along U,
///   (D dexp)(U) = sum_i a_i (D P_i)(U) + (x^T u) sum_i abar_i P_i,
/// assembled from the generic sums; equals +/- ad(U)/2 exactly at X = 0.
Mat6 ddexp(const Vec6& X, const Vec6& U, Variant variant = Variant::dexp);

/// Second directional derivative of dexp (or dexpinv) along U and S.
Mat6 d2dexp(const Vec6& X, const Vec6& U, const Vec6& S, Variant variant = Variant::dexp);

struct TwistDerivatives {
  Vec6 V;    ///< dexp_X Xd
  Vec6 Vd;   ///< twist rate (reduced acceleration)
  Vec6 Vdd;  ///< twist jerk
};

/// Spatial twist and its first two time derivatives from the coordinate
/// derivatives of a curve X(t).
TwistDerivatives twist_derivatives(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                   const Vec6& Xddd);

/// Generic-sum assemblies taking an explicit coefficient set instead of the
/// kernel-evaluated one.  ddexp/d2dexp above delegate here; passing the
/// naive coefficient structs reproduces a non-robust implementation, and
/// perturbed structs serve as mutation fixtures for the oracle suites.
Mat6 dexp_from_coeffs(const Vec6& X, const DexpCoeffs& c, Variant variant);
Mat6 ddexp_from_coeffs(const Vec6& X, const Vec6& U, const DexpCoeffs& c,
                       const DexpCoeffDerivs& d, Variant variant);
Mat6 d2dexp_from_coeffs(const Vec6& X, const Vec6& U, const Vec6& S, const DexpCoeffs& c,
                        const DexpCoeffDerivs& d, Variant variant);

}  // namespace se3tan
