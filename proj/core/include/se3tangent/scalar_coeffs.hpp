#pragma once

namespace se3tan {

/// Base trigonometric coefficients of the Rodrigues formula and the SO(3)
/// tangent operator, as functions of the rotation angle phi = ||x||.
///
///   alpha = sinc(phi), beta = sinc^2(phi/2), gamma = alpha/beta,
///   delta = (1 - alpha)/phi^2.
struct BaseCoeffs {
  double alpha;
  double beta;
  double gamma;
  double delta;
};

/// Coefficients of the closed-form SE(3) tangent operator
/// dexp = I + a1 P1 + a2 P2 + a3 P3 + a4 P4 and its inverse
/// dexpinv = I + b1 P1 + b2 P2 + b4 P4, with P_i = ad^i.
struct DexpCoeffs {
  double a1, a2, a3, a4;
  double b1, b2, b4;
};

/// First- and second-derivative multipliers of the a_i/b_i coefficient
/// families:
///   (D a_i)(U)       = (x^T u) abar_i
///   (D^2 a_i)(U)(S)  = (s^T u) abar_i + (x^T u)(x^T s) abreve_i
/// and the same with b for the inverse.  abar1/abar2/bbar2 vanish at phi=0.
struct DexpCoeffDerivs {
  double abar1, abar2, abar3, abar4;
  double bbar2, bbar4;
  double abreve1, abreve2, abreve3, abreve4;
  double bbreve2, bbreve4;
};

/// Norm threshold below which the internal even Taylor kernels keep the
/// removable singularities of the closed forms away from 0/0.  The closed
/// forms take over above it, where they are free of cancellation.
inline constexpr double kCoeffSeriesThreshold = 3.2;

/// Rejection bound of the principal-range domain.
inline constexpr double kMaxAngle = 6.28318530717958647692;  // 2*pi

BaseCoeffs base_coeffs(double phi);
DexpCoeffs dexp_coeffs(double phi);
DexpCoeffDerivs dexp_coeff_derivs(double phi);

/// Literal textbook evaluation of the same coefficients, with raw divisions
/// by powers of phi and no series kernels.  Exhibits the catastrophic
/// cancellation near phi = 0 that the robust paths avoid; used by the rod
/// demo to reproduce the artifacts of a non-robust implementation.
DexpCoeffs dexp_coeffs_naive(double phi);
DexpCoeffDerivs dexp_coeff_derivs_naive(double phi);

}  // namespace se3tan
