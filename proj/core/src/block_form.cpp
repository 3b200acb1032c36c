#include "se3tangent/block_form.hpp"

#include <cmath>

#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/so3.hpp"

namespace se3tan {
namespace {

// Scalar multipliers of the block-partitioned closed forms.  Every one is a
// difference quotient that cancels catastrophically near phi = 0, so each
// gets its own even Taylor kernel below the switch radius:
//   m1 = (alpha - beta)/phi^2
//   m2 = (beta/2 - 3 delta)/phi^2
//   w1 = (1 - 5 alpha + 4 beta)/phi^4 - beta/(2 phi^2)
//   q2 = (alpha - (7/2) beta + 15 delta)/phi^4
//   h2 = (1 - gamma)/phi^2
//   h3 = (1/beta + gamma - 2)/phi^4
//   r2 = (8 - 3 gamma - gamma^2 - 2(alpha + beta)/beta^2)/phi^6 - 1/(4 phi^4)
struct BlockCoeffs {
  double alpha, beta, delta;
  double m1, m2, w1, q2, h2, h3, r2;
};

constexpr double kBlockKernelRadius = 0.1;
constexpr int kBlockTerms = 8;

constexpr double kM1[kBlockTerms] = {
    -8.33333333333333287e-02, +5.55555555555555577e-03, -1.48809523809523823e-04,
    +2.20458553791887106e-06, -2.08767569878681002e-08, +1.37648947172756701e-10,
    -6.69126826534233923e-13, +2.49907311497379604e-15};
constexpr double kM2[kBlockTerms] = {
    -1.66666666666666664e-02, +7.93650793650793650e-04, -1.65343915343915355e-05,
    +2.00416867083533762e-07, -1.60590438368216149e-09, +9.17659647818377928e-12,
    -3.93604015608372900e-14, +1.31530163945989272e-16};
constexpr double kW1[kBlockTerms] = {
    +1.11111111111111115e-02, -5.95238095238095292e-04, +1.32275132275132281e-05,
    -1.67014055902944801e-07, +1.37648947172756690e-09, -8.02952191841080667e-12,
    +3.49870236096331501e-14, -1.18377147551390352e-16};
constexpr double kQ2[kBlockTerms] = {
    +1.58730158730158730e-03, -6.61375661375661420e-05, +1.20250120250120257e-06,
    -1.28472350694572919e-08, +9.17659647818377961e-11, -4.72324818730047505e-13,
    +1.84142229524384976e-15, -5.63700702625668343e-18};
constexpr double kH2[kBlockTerms] = {
    +8.33333333333333287e-02, +1.38888888888888894e-03, +3.30687830687830710e-05,
    +8.26719576719576754e-07, +2.08767569878681002e-08, +5.28419013868749322e-10,
    +1.33825365306846789e-11, +3.38968029632258272e-13};
constexpr double kH3[kBlockTerms] = {
    +2.77777777777777788e-03, +1.32275132275132284e-04, +4.96031746031746031e-06,
    +1.67014055902944801e-07, +5.28419013868749343e-09, +1.60590438368216133e-10,
    +4.74555241485161621e-12, +1.37376992900445523e-13};
constexpr double kR2[kBlockTerms] = {
    +2.64550264550264568e-04, +1.98412698412698413e-05, +1.00208433541766870e-06,
    +4.22735211094999474e-08, +1.60590438368216149e-09, +5.69466289782193913e-11,
    +1.92327790060623722e-12, +6.26362185184721763e-14};

double horner(const double (&c)[kBlockTerms], double p2) {
  double acc = c[kBlockTerms - 1];
  for (int i = kBlockTerms - 2; i >= 0; --i) acc = acc * p2 + c[i];
  return acc;
}

BlockCoeffs block_coeffs(double phi) {
  const BaseCoeffs b = base_coeffs(phi);
  BlockCoeffs c;
  c.alpha = b.alpha;
  c.beta = b.beta;
  c.delta = b.delta;
  const double p2 = phi * phi;
  if (phi < kBlockKernelRadius) {
    c.m1 = horner(kM1, p2);
    c.m2 = horner(kM2, p2);
    c.w1 = horner(kW1, p2);
    c.q2 = horner(kQ2, p2);
    c.h2 = horner(kH2, p2);
    c.h3 = horner(kH3, p2);
    c.r2 = horner(kR2, p2);
  } else {
    const double p4 = p2 * p2;
    const double ga = b.gamma;
    c.m1 = (b.alpha - b.beta) / p2;
    c.m2 = (0.5 * b.beta - 3.0 * b.delta) / p2;
    c.w1 = (1.0 - 5.0 * b.alpha + 4.0 * b.beta) / p4 - b.beta / (2.0 * p2);
    c.q2 = (b.alpha - 3.5 * b.beta + 15.0 * b.delta) / p4;
    c.h2 = (1.0 - ga) / p2;
    c.h3 = (1.0 / b.beta + ga - 2.0) / p4;
    c.r2 = (8.0 - 3.0 * ga - ga * ga - 2.0 * (b.alpha + b.beta) / (b.beta * b.beta)) /
               (p4 * p2) -
           0.25 / p4;
  }
  return c;
}

// (D_X Ddexp)(U): derivative of the off-diagonal block along U = (u, v).
// The inverse variant is stated after correcting two transcription slips of
// the commonly printed form (see docs/NOTES.md); in the corrected grouping
// its (x^T u)(~x~y + ~y~x) multiplier coincides with h3.
Mat3 d_offdiag(const Vec3& x, const Vec3& y, const Vec3& u, const Vec3& v, Variant variant) {
  const double phi = x.norm();
  const Mat3 sx = skew(x), sy = skew(y), su = skew(u), sv = skew(v);
  if (phi == 0.0) {
    if (variant == Variant::dexp) return 0.5 * sv + (1.0 / 6.0) * (sy * su + su * sy);
    return -0.5 * sv + (1.0 / 12.0) * (sy * su + su * sy);
  }
  const BlockCoeffs c = block_coeffs(phi);
  const double xy = x.dot(y), xu = x.dot(u), xv = x.dot(v), yu = y.dot(u);
  const Mat3 x2 = sx * sx;
  if (variant == Variant::dexp) {
    return 0.5 * c.beta * sv + c.m1 * (xu * sy + (xv + yu) * sx + xy * su) +
           c.delta * (sx * sv + sv * sx + sy * su + su * sy) +
           c.m2 * (xy * (sx * su + su * sx) + xu * (sx * sy + sy * sx) + (xv + yu) * x2) +
           (xy * xu) * (c.w1 * sx + c.q2 * x2);
  }
  return -0.5 * sv + c.h2 * (sx * sv + sv * sx + sy * su + su * sy) +
         c.h3 * (xu * (sx * sy + sy * sx) + xy * (sx * su + su * sx) + (xv + yu) * x2) +
         (xy * xu) * c.r2 * x2;
}

}  // namespace

Transform exp_block(const Vec6& X) {
  const Vec3 x = rotation_part(X);
  const Vec3 y = translation_part(X);
  const double p2 = x.squaredNorm();
  if (p2 == 0.0) return Transform{Mat3::Identity(), y};
  const Mat3 R = exp_so3(x);
  const double h = x.dot(y) / p2;
  // screw displacement: rotation about the axis plus the pitch translation
  // h * x along it (the pitch term is sometimes misprinted as h * y, which
  // breaks the identity with dexp_x y; see docs/NOTES.md)
  return Transform{R, (Mat3::Identity() - R) * (skew(x) * y) / p2 + h * x};
}

Mat3 ddexp_so3_block(const Vec3& x, const Vec3& y, Variant variant) {
  const double phi = x.norm();
  const Mat3 sy = skew(y);
  if (phi == 0.0) return (variant == Variant::dexp ? 0.5 : -0.5) * sy;
  const BlockCoeffs c = block_coeffs(phi);
  const Mat3 sx = skew(x);
  const double xy = x.dot(y);
  if (variant == Variant::dexp) {
    return 0.5 * c.beta * sy + c.delta * (sx * sy + sy * sx) + xy * c.m1 * sx +
           xy * c.m2 * (sx * sx);
  }
  return -0.5 * sy + c.h2 * (sx * sy + sy * sx) + xy * c.h3 * (sx * sx);
}

BlockTangent dexp_block(const Vec6& X, Variant variant) {
  const Vec3 x = rotation_part(X);
  const Vec3 y = translation_part(X);
  BlockTangent out;
  out.diag = variant == Variant::dexp ? dexp_so3(x) : dexpinv_so3(x);
  out.offdiag = ddexp_so3_block(x, y, variant);
  return out;
}

Mat6 ddexp_block(const Vec6& X, const Vec6& U, Variant variant) {
  const Vec3 x = rotation_part(X);
  const Vec3 y = translation_part(X);
  const Vec3 u = rotation_part(U);
  const Vec3 v = translation_part(U);
  BlockTangent d;
  d.diag = ddexp_so3_block(x, u, variant);
  d.offdiag = d_offdiag(x, y, u, v, variant);
  return d.assemble();
}

}  // namespace se3tan
