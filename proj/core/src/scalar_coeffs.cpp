#include "se3tangent/scalar_coeffs.hpp"

#include <cmath>
#include <stdexcept>

#include "se3tangent/detail/coeff_series.hpp"

namespace se3tan {
namespace {

double horner_even(const double (&c)[detail::kSeriesTerms], double phi2) {
  double acc = c[detail::kSeriesTerms - 1];
  for (int i = detail::kSeriesTerms - 2; i >= 0; --i) acc = acc * phi2 + c[i];
  return acc;
}

void check_domain(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("coefficient angle must be finite");
  if (phi < 0.0 || phi >= kMaxAngle)
    throw std::invalid_argument("coefficient angle must lie in [0, 2*pi)");
}

}  // namespace

BaseCoeffs base_coeffs(double phi) {
  check_domain(phi);
  BaseCoeffs c;
  if (phi < kCoeffSeriesThreshold) {
    const double p2 = phi * phi;
    c.alpha = horner_even(detail::kSeries_alpha, p2);
    c.beta = horner_even(detail::kSeries_beta, p2);
    c.gamma = horner_even(detail::kSeries_gamma, p2);
    c.delta = horner_even(detail::kSeries_delta, p2);
  } else {
    const double h = std::sin(0.5 * phi) / (0.5 * phi);
    c.alpha = std::sin(phi) / phi;
    c.beta = h * h;
    c.gamma = c.alpha / c.beta;
    c.delta = (1.0 - c.alpha) / (phi * phi);
  }
  return c;
}

DexpCoeffs dexp_coeffs(double phi) {
  check_domain(phi);
  DexpCoeffs c;
  c.b1 = -0.5;
  if (phi < kCoeffSeriesThreshold) {
    const double p2 = phi * phi;
    c.a1 = horner_even(detail::kSeries_a1, p2);
    c.a2 = horner_even(detail::kSeries_a2, p2);
    c.a3 = horner_even(detail::kSeries_a3, p2);
    c.a4 = horner_even(detail::kSeries_a4, p2);
    c.b2 = horner_even(detail::kSeries_b2, p2);
    c.b4 = horner_even(detail::kSeries_b4, p2);
  } else {
    const BaseCoeffs b = base_coeffs(phi);
    const double p2 = phi * phi;
    c.a1 = b.beta - 0.5 * b.alpha;
    c.a2 = 0.5 * (5.0 * b.delta - 0.5 * b.beta);
    c.a3 = (b.beta - b.alpha) / (2.0 * p2);
    c.a4 = (3.0 * b.delta - 0.5 * b.beta) / (2.0 * p2);
    c.b2 = (2.0 - (1.0 + 3.0 * b.alpha) / (2.0 * b.beta)) / p2;
    c.b4 = (1.0 - (1.0 + b.alpha) / (2.0 * b.beta)) / (p2 * p2);
  }
  return c;
}

DexpCoeffDerivs dexp_coeff_derivs(double phi) {
  check_domain(phi);
  DexpCoeffDerivs c;
  if (phi < kCoeffSeriesThreshold) {
    const double p2 = phi * phi;
    c.abar1 = horner_even(detail::kSeries_abar1, p2);
    c.abar2 = horner_even(detail::kSeries_abar2, p2);
    c.abar3 = horner_even(detail::kSeries_abar3, p2);
    c.abar4 = horner_even(detail::kSeries_abar4, p2);
    c.bbar2 = horner_even(detail::kSeries_bbar2, p2);
    c.bbar4 = horner_even(detail::kSeries_bbar4, p2);
    c.abreve1 = horner_even(detail::kSeries_abreve1, p2);
    c.abreve2 = horner_even(detail::kSeries_abreve2, p2);
    c.abreve3 = horner_even(detail::kSeries_abreve3, p2);
    c.abreve4 = horner_even(detail::kSeries_abreve4, p2);
    c.bbreve2 = horner_even(detail::kSeries_bbreve2, p2);
    c.bbreve4 = horner_even(detail::kSeries_bbreve4, p2);
  } else {
    // the literal closed forms stop cancelling above the series radius
    c = dexp_coeff_derivs_naive(phi);
  }
  return c;
}

DexpCoeffs dexp_coeffs_naive(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("coefficient angle must be finite");
  const double p2 = phi * phi;
  const double al = std::sin(phi) / phi;
  const double be = 2.0 * (1.0 - std::cos(phi)) / p2;
  const double de = (1.0 - al) / p2;
  DexpCoeffs c;
  c.a1 = be - 0.5 * al;
  c.a2 = 0.5 * (5.0 * de - 0.5 * be);
  c.a3 = (be - al) / (2.0 * p2);
  c.a4 = (3.0 * de - 0.5 * be) / (2.0 * p2);
  c.b1 = -0.5;
  c.b2 = (2.0 - (1.0 + 3.0 * al) / (2.0 * be)) / p2;
  c.b4 = (1.0 - (1.0 + al) / (2.0 * be)) / (p2 * p2);
  return c;
}

DexpCoeffDerivs dexp_coeff_derivs_naive(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("coefficient angle must be finite");
  const double p2 = phi * phi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double p8 = p4 * p4;
  const double al = std::sin(phi) / phi;
  const double be = 2.0 * (1.0 - std::cos(phi)) / p2;
  const double ga = al / be;
  DexpCoeffDerivs c;
  c.abar1 = 0.25 * be + (2.5 * al - 2.0 * be - 0.5) / p2;
  c.abar2 = (1.75 * be - 0.5 * al) / p2 + 7.5 * (al - 1.0) / p4;
  c.abar3 = c.abar1 / p2;
  c.abar4 = c.abar2 / p2;
  c.bbar2 = 0.75 / p2 + (ga * (1.5 + 1.0 / be + 3.0 * ga) - 1.5 / be - 4.0) / p4;
  c.bbar4 = 0.25 / p4 + (0.5 / be + 1.5 * ga + ga / be + ga * ga - 4.0) / p6;
  c.abreve1 = (0.5 * al - 1.75 * be) / p2 + (3.5 - 11.5 * al + 8.0 * be) / p4;
  c.abreve2 = 0.25 * be / p2 + (5.0 * al - 10.75 * be - 0.5) / p4 + 37.5 * (1.0 - al) / p6;
  c.abreve3 = (0.5 * al - 2.25 * be) / p4 + (4.5 - 16.5 * al + 12.0 * be) / p6;
  c.abreve4 = 0.25 * be / p4 + (6.0 * al - 0.5 - 14.25 * be) / p6 + 52.5 * (1.0 - al) / p8;
  c.bbreve2 = (16.0 + 1.0 / (be * be) + (8.0 / be - 4.5) * ga - (9.0 + 4.0 / be) * ga * ga -
               12.0 * ga * ga * ga + 4.5 / be) / p6 -
              (2.25 + 3.0 * ga + 0.5 / be) / p4;
  c.bbreve4 = (24.0 - 2.0 / be - (7.5 + 4.0 / be) * ga - (5.5 + 3.0 / be) * ga * ga -
               2.0 * ga * ga * ga) / p8 -
              (1.375 + 0.25 / be + 0.5 * ga) / p6;
  return c;
}

}  // namespace se3tan
