#include "se3tangent/derivatives.hpp"

#include <array>
#include <stdexcept>

#include "se3tangent/algebra.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/scalar_coeffs.hpp"

namespace se3tan {
namespace {

using P5 = std::array<Mat6, 5>;

P5 powers(const Vec6& X) {
  P5 P;
  P[0] = Mat6::Identity();
  const Mat6 A = ad(X);
  for (int i = 1; i <= 4; ++i) P[i] = P[i - 1] * A;
  return P;
}

Mat6 dP_impl(const P5& P, const Mat6& AU, int i) {
  Mat6 M = Mat6::Zero();
  for (int j = 0; j < i; ++j) M += P[j] * AU * P[i - j - 1];
  return M;
}

Mat6 d2P_impl(const P5& P, const Mat6& AU, const Mat6& AS, int i) {
  Mat6 M = Mat6::Zero();
  for (int j = 1; j < i; ++j) {
    const Mat6 dPjS = dP_impl(P, AS, j);
    M += dPjS * AU * P[i - j - 1] + P[i - j - 1] * AU * dPjS;
  }
  return M;
}

struct Weights {
  std::array<double, 5> w;      // coefficient of P_i
  std::array<double, 5> bar;    // first-derivative multiplier
  std::array<double, 5> breve;  // second-derivative multiplier
};

Weights pick(const DexpCoeffs& c, const DexpCoeffDerivs& d, Variant variant) {
  Weights out{};
  if (variant == Variant::dexp) {
    out.w = {0.0, c.a1, c.a2, c.a3, c.a4};
    out.bar = {0.0, d.abar1, d.abar2, d.abar3, d.abar4};
    out.breve = {0.0, d.abreve1, d.abreve2, d.abreve3, d.abreve4};
  } else {
    out.w = {0.0, c.b1, c.b2, 0.0, c.b4};
    out.bar = {0.0, 0.0, d.bbar2, 0.0, d.bbar4};
    out.breve = {0.0, 0.0, d.bbreve2, 0.0, d.bbreve4};
  }
  return out;
}

Mat6 ddexp_impl(const Vec6& X, const Vec6& U, const Weights& wt) {
  const P5 P = powers(X);
  const Mat6 AU = ad(U);
  const double xu = rotation_part(X).dot(rotation_part(U));
  Mat6 M = Mat6::Zero();
  for (int i = 1; i <= 4; ++i) {
    if (wt.w[i] != 0.0) M += wt.w[i] * dP_impl(P, AU, i);
    if (wt.bar[i] != 0.0) M += (xu * wt.bar[i]) * P[i];
  }
  return M;
}

Mat6 d2dexp_impl(const Vec6& X, const Vec6& U, const Vec6& S, const Weights& wt) {
  const P5 P = powers(X);
  const Mat6 AU = ad(U);
  const Mat6 AS = ad(S);
  const double xu = rotation_part(X).dot(rotation_part(U));
  const double xs = rotation_part(X).dot(rotation_part(S));
  const double su = rotation_part(S).dot(rotation_part(U));
  Mat6 M = Mat6::Zero();
  for (int i = 1; i <= 4; ++i) {
    const double c2 = su * wt.bar[i] + xu * xs * wt.breve[i];
    if (c2 != 0.0) M += c2 * P[i];
    if (i >= 2 && wt.w[i] != 0.0) M += wt.w[i] * d2P_impl(P, AU, AS, i);
    if (wt.bar[i] != 0.0)
      M += (xu * wt.bar[i]) * dP_impl(P, AS, i) + (xs * wt.bar[i]) * dP_impl(P, AU, i);
  }
  return M;
}

}  // namespace

Mat6 dP(const Vec6& X, const Vec6& U, int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("dP index must lie in [1, 4]");
  return dP_impl(powers(X), ad(U), i);
}

Mat6 d2P(const Vec6& X, const Vec6& U, const Vec6& S, int i) {
  if (i < 2 || i > 4) throw std::invalid_argument("d2P index must lie in [2, 4]");
  return d2P_impl(powers(X), ad(U), ad(S), i);
}

Mat6 ddexp(const Vec6& X, const Vec6& U, Variant variant) {
  const double phi = rotation_part(X).norm();
  return ddexp_impl(X, U, pick(dexp_coeffs(phi), dexp_coeff_derivs(phi), variant));
}

Mat6 d2dexp(const Vec6& X, const Vec6& U, const Vec6& S, Variant variant) {
  const double phi = rotation_part(X).norm();
  return d2dexp_impl(X, U, S, pick(dexp_coeffs(phi), dexp_coeff_derivs(phi), variant));
}

Mat6 dexp_from_coeffs(const Vec6& X, const DexpCoeffs& c, Variant variant) {
  const Weights wt = pick(c, DexpCoeffDerivs{}, variant);
  const P5 P = powers(X);
  Mat6 M = Mat6::Identity();
  for (int i = 1; i <= 4; ++i)
    if (wt.w[i] != 0.0) M += wt.w[i] * P[i];
  return M;
}

Mat6 ddexp_from_coeffs(const Vec6& X, const Vec6& U, const DexpCoeffs& c,
                       const DexpCoeffDerivs& d, Variant variant) {
  return ddexp_impl(X, U, pick(c, d, variant));
}

Mat6 d2dexp_from_coeffs(const Vec6& X, const Vec6& U, const Vec6& S, const DexpCoeffs& c,
                        const DexpCoeffDerivs& d, Variant variant) {
  return d2dexp_impl(X, U, S, pick(c, d, variant));
}

TwistDerivatives twist_derivatives(const Vec6& X, const Vec6& Xd, const Vec6& Xdd,
                                   const Vec6& Xddd) {
  const Mat6 D = dexp(X);
  const Mat6 DdXd = ddexp(X, Xd);
  TwistDerivatives out;
  out.V = D * Xd;
  out.Vd = D * Xdd + DdXd * Xd;
  out.Vdd = D * Xddd + 2.0 * (DdXd * Xdd) + ddexp(X, Xdd) * Xd + d2dexp(X, Xd, Xd) * Xd;
  return out;
}

}  // namespace se3tan
