#include "se3tangent/exp_dexp.hpp"

#include <array>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "se3tangent/algebra.hpp"
#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/so3.hpp"

namespace se3tan {
namespace {

constexpr int kMaxSeriesOrder = 60;

// w_i = B_i/i! (first-kind Bernoulli, B_1 = -1/2) from the recurrence of
// t/(e^t - 1), in exact rationals.
const std::array<double, kMaxSeriesOrder + 1>& bernoulli_weights() {
  using rational = boost::multiprecision::cpp_rational;
  static const std::array<double, kMaxSeriesOrder + 1> table = [] {
    std::array<rational, kMaxSeriesOrder + 1> c;
    std::array<rational, kMaxSeriesOrder + 2> inv_factorial;
    inv_factorial[0] = 1;
    for (int i = 1; i <= kMaxSeriesOrder + 1; ++i) inv_factorial[i] = inv_factorial[i - 1] / i;
    c[0] = 1;
    for (int m = 1; m <= kMaxSeriesOrder; ++m) {
      rational s = 0;
      for (int j = 0; j < m; ++j) s += c[j] * inv_factorial[m + 1 - j];
      c[m] = -s;
    }
    std::array<double, kMaxSeriesOrder + 1> out;
    for (int i = 0; i <= kMaxSeriesOrder; ++i) out[i] = static_cast<double>(c[i]);
    return out;
  }();
  return table;
}

const std::array<double, kMaxSeriesOrder + 1>& dexp_weights() {
  static const std::array<double, kMaxSeriesOrder + 1> table = [] {
    std::array<double, kMaxSeriesOrder + 1> out;
    double fact = 1.0;
    for (int i = 0; i <= kMaxSeriesOrder; ++i) {
      fact *= (i + 1);
      out[static_cast<size_t>(i)] = 1.0 / fact;  // 1/(i+1)!
    }
    return out;
  }();
  return table;
}

double angle_checked(const Vec6& X) {
  if (!X.allFinite()) throw std::invalid_argument("screw vector must be finite");
  const double phi = rotation_part(X).norm();
  if (phi >= kMaxAngle) throw std::invalid_argument("rotation angle must lie in [0, 2*pi)");
  return phi;
}

}  // namespace

Transform exp_se3(const Vec6& X) {
  const double phi = angle_checked(X);
  const BaseCoeffs c = base_coeffs(phi);
  const Mat4 A = hat(X);
  const Mat4 A2 = A * A;
  const Mat4 H = Mat4::Identity() + A + 0.5 * c.beta * A2 + c.delta * (A2 * A);
  return Transform{H.topLeftCorner<3, 3>(), H.topRightCorner<3, 1>()};
}

Vec6 log_se3(const Transform& H) {
  const Vec3 x = log_so3(H.R);
  return screw(x, dexpinv_so3(x) * H.r);
}

Mat6 dexp(const Vec6& X, double eps_switch) {
  const double phi = angle_checked(X);
  const Mat6 A = ad(X);
  if (phi < eps_switch || phi == 0.0) {
    const Mat6 A2 = A * A;
    return Mat6::Identity() + 0.5 * A + (1.0 / 6.0) * A2 + (1.0 / 24.0) * (A2 * A);
  }
  const BaseCoeffs b = base_coeffs(phi);
  const DexpCoeffs c = dexp_coeffs(phi);
  const double p2 = phi * phi;
  const double one_minus_alpha = p2 * b.delta;
  const Mat6 A2 = A * A;
  const Mat6 AN = A / phi;
  const Mat6 AN2 = AN * AN;
  const Mat6 AN4 = AN2 * AN2;
  return Mat6::Identity() + c.a1 * A - 0.25 * b.beta * A2 + 2.5 * one_minus_alpha * AN2 +
         (p2 * c.a3) * (AN2 * A) - 0.25 * b.beta * (AN2 * A2) + 1.5 * one_minus_alpha * AN4;
}

Mat6 dexpinv(const Vec6& X, double eps_switch) {
  const double phi = angle_checked(X);
  const Mat6 A = ad(X);
  if (phi < eps_switch || phi == 0.0) {
    return Mat6::Identity() - 0.5 * A + (1.0 / 12.0) * (A * A);
  }
  const DexpCoeffs c = dexp_coeffs(phi);
  const double p2 = phi * phi;
  const Mat6 AN = A / phi;
  const Mat6 AN2 = AN * AN;
  const Mat6 AN4 = AN2 * AN2;
  return Mat6::Identity() - 0.5 * A + (p2 * c.b2) * AN2 + (p2 * p2 * c.b4) * AN4;
}

double series_weight(Variant variant, int i) {
  if (i < 0 || i > kMaxSeriesOrder) throw std::invalid_argument("series index out of range");
  return variant == Variant::dexp ? dexp_weights()[static_cast<size_t>(i)]
                                  : bernoulli_weights()[static_cast<size_t>(i)];
}

Mat6 dexp_series(const Vec6& X, Variant variant, int order) {
  if (order < 0 || order > kMaxSeriesOrder)
    throw std::invalid_argument("series order must lie in [0, 60]");
  if (!X.allFinite()) throw std::invalid_argument("screw vector must be finite");
  const Mat6 A = ad(X);
  Mat6 acc = Mat6::Identity();
  Mat6 power = Mat6::Identity();
  for (int i = 1; i <= order; ++i) {
    power = power * A;
    const double w = series_weight(variant, i);
    if (w != 0.0) acc += w * power;
  }
  return acc;
}

}  // namespace se3tan
