#include "se3tangent/jacobians.hpp"

#include <array>

#include "se3tangent/algebra.hpp"
#include "se3tangent/scalar_coeffs.hpp"

namespace se3tan {
namespace {

struct Context {
  std::array<Mat6, 5> P;
  std::array<Vec6, 5> Z;        // Z_i = P_i Z
  std::array<double, 5> w;      // a_i or b_i
  std::array<double, 5> bar;    // abar_i or bbar_i
  std::array<double, 5> breve;  // abreve_i or bbreve_i
  Vec6 x6;                      // [x; 0]
};

Context make_context(const Vec6& X, const Vec6& Z, const DexpCoeffs& k,
                     const DexpCoeffDerivs& d, bool inverse) {
  Context c;
  c.P[0] = Mat6::Identity();
  const Mat6 A = ad(X);
  for (int i = 1; i <= 4; ++i) c.P[i] = c.P[i - 1] * A;
  c.Z[0] = Z;
  for (int i = 1; i <= 4; ++i) c.Z[i] = A * c.Z[i - 1];
  if (inverse) {
    c.w = {0.0, k.b1, k.b2, 0.0, k.b4};
    c.bar = {0.0, 0.0, d.bbar2, 0.0, d.bbar4};
    c.breve = {0.0, 0.0, d.bbreve2, 0.0, d.bbreve4};
  } else {
    c.w = {0.0, k.a1, k.a2, k.a3, k.a4};
    c.bar = {0.0, d.abar1, d.abar2, d.abar3, d.abar4};
    c.breve = {0.0, d.abreve1, d.abreve2, d.abreve3, d.abreve4};
  }
  c.x6 = screw(rotation_part(X), Vec3::Zero());
  return c;
}

// sum_{j=0}^{i-1} P_{i,j}(X, Z) with P_{i,j} = -P_j ad(Z_{i-j-1}); satisfies
// (D P_i)(U) Z = [this matrix] U.
Mat6 pij_sum(const Context& c, int i) {
  Mat6 M = Mat6::Zero();
  for (int j = 0; j < i; ++j) M -= c.P[j] * ad(c.Z[i - j - 1]);
  return M;
}

Mat6 jac_impl(const Vec6& X, const Vec6& Z, const DexpCoeffs& k, const DexpCoeffDerivs& d,
              EvalVariant variant) {
  if (variant == EvalVariant::dexpT) {
    Context c = make_context(X, Z, k, d, false);
    for (int i = 1; i <= 4; ++i) c.Z[i] = c.P[1].transpose() * c.Z[i - 1];  // Zbar_i = P_i^T Z
    Mat6 M = Mat6::Zero();
    for (int i = 1; i <= 4; ++i) {
      Mat6 s = Mat6::Zero();
      for (int j = 0; j < i; ++j) s += c.P[i - j - 1].transpose() * ad_bar(c.Z[j]);
      M += c.w[i] * s + c.bar[i] * (c.Z[i] * c.x6.transpose());
    }
    return M;
  }
  const Context c = make_context(X, Z, k, d, variant == EvalVariant::dexpinv);
  Mat6 M = Mat6::Zero();
  for (int i = 1; i <= 4; ++i) {
    if (c.w[i] != 0.0) M += c.w[i] * pij_sum(c, i);
    if (c.bar[i] != 0.0) M += c.bar[i] * (c.Z[i] * c.x6.transpose());
  }
  return M;
}

Mat6 hessian_impl(const Vec6& X, const Vec6& Q, const Vec6& Z, const DexpCoeffs& k,
                  const DexpCoeffDerivs& d, Variant variant) {
  const Context c = make_context(X, Z, k, d, variant == Variant::dexpinv);
  std::array<Vec6, 5> Qbar;  // Qbar_i = P_i^T Q
  Qbar[0] = Q;
  for (int i = 1; i <= 4; ++i) Qbar[i] = c.P[1].transpose() * Qbar[i - 1];
  const Vec3 x = rotation_part(X);

  Mat6 H = Mat6::Zero();
  for (int i = 1; i <= 4; ++i) {
    // H1i: scalar second derivatives of the coefficients
    if (c.bar[i] != 0.0 || c.breve[i] != 0.0) {
      const double qz = Q.dot(c.Z[i]);
      H.topLeftCorner<3, 3>() +=
          qz * (c.bar[i] * Mat3::Identity() + c.breve[i] * (x * x.transpose()));
    }
    // H2i: Q^T (D^2 P_i)(U)(S) Z through the Hbar_i double sum
    if (i >= 2 && c.w[i] != 0.0) {
      Mat6 Hb = Mat6::Zero();
      for (int j = 1; j < i; ++j)
        for (int l = 0; l < j; ++l)
          Hb += ad_bar(Qbar[i - j - 1]) * c.P[l] * ad(c.Z[j - l - 1]);
      H += c.w[i] * (Hb + Hb.transpose());
    }
    // H3i: coefficient-derivative cross terms
    if (c.bar[i] != 0.0) {
      const Mat6 H3 = c.bar[i] * (c.x6 * (Q.transpose() * pij_sum(c, i)));
      H += H3 + H3.transpose();
    }
  }
  return 0.5 * (H + H.transpose());
}

}  // namespace

Mat6 jac_eval(const Vec6& X, const Vec6& Z, EvalVariant variant) {
  const double phi = rotation_part(X).norm();
  return jac_impl(X, Z, dexp_coeffs(phi), dexp_coeff_derivs(phi), variant);
}

Mat6 hessian_eval(const Vec6& X, const Vec6& Q, const Vec6& Z, Variant variant) {
  const double phi = rotation_part(X).norm();
  return hessian_impl(X, Q, Z, dexp_coeffs(phi), dexp_coeff_derivs(phi), variant);
}

Mat6 jac_eval_from_coeffs(const Vec6& X, const Vec6& Z, const DexpCoeffs& c,
                          const DexpCoeffDerivs& d, EvalVariant variant) {
  return jac_impl(X, Z, c, d, variant);
}

Mat6 hessian_eval_from_coeffs(const Vec6& X, const Vec6& Q, const Vec6& Z, const DexpCoeffs& c,
                              const DexpCoeffDerivs& d, Variant variant) {
  return hessian_impl(X, Q, Z, c, d, variant);
}

}  // namespace se3tan
