#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/so3.hpp"
#include "support/oracles.hpp"

using namespace se3tan;
using testing::max_abs;

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat3 so3_series(const Vec3& x, bool tangent, int order) {
  // exp or dexp restricted to so(3): sum skew(x)^i / i! resp. /(i+1)!
  const Mat3 A = skew(x);
  Mat3 acc = Mat3::Identity();
  Mat3 power = Mat3::Identity();
  double fact = 1.0;
  for (int i = 1; i <= order; ++i) {
    power = power * A;
    fact *= tangent ? (i + 1) : i;
    acc += power / fact;
  }
  return acc;
}

std::mt19937_64 rng(101);

}  // namespace

TEST_CASE("exp_so3 basics") {
  CHECK(max_abs(exp_so3(Vec3::Zero()) - Mat3::Identity()) == 0.0);

  Mat3 Rz;
  Rz << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(max_abs(exp_so3(Vec3(0, 0, kPi / 2)) - Rz) < 1e-15);

  for (int t = 0; t < 10; ++t) {
    Vec3 x = testing::random_vec6(rng).head<3>();
    x *= 1.3 / x.norm();
    const Mat3 R = exp_so3(x);
    CHECK(max_abs(R.transpose() * R - Mat3::Identity()) < 1e-12);
    CHECK(std::abs(R.determinant() - 1.0) < 1e-12);
    CHECK((R * x - x).norm() < 1e-13);  // rotation axis is fixed
    CHECK(max_abs(R * exp_so3(Vec3(-x)) - Mat3::Identity()) < 1e-14);
    CHECK(max_abs(R - so3_series(x, false, 30)) < 1e-14);
  }
}

TEST_CASE("dexp_so3 and its inverse") {
  CHECK(max_abs(dexp_so3(Vec3::Zero()) - Mat3::Identity()) == 0.0);
  CHECK(max_abs(dexpinv_so3(Vec3::Zero()) - Mat3::Identity()) == 0.0);

  for (int t = 0; t < 10; ++t) {
    Vec3 x = testing::random_vec6(rng).head<3>();
    x *= 2.0 / x.norm();
    CHECK(max_abs(dexp_so3(x) * dexpinv_so3(x) - Mat3::Identity()) < 1e-13);
    CHECK(max_abs(dexp_so3(x) - so3_series(x, true, 30)) < 1e-13);
  }
}

TEST_CASE("x-form and normalized form of the SO(3) tangent operators agree") {
  std::uniform_real_distribution<double> lognorm(std::log(1e-6), std::log(3.0));
  for (int t = 0; t < 50; ++t) {
    Vec3 x = testing::random_vec6(rng).head<3>();
    x *= std::exp(lognorm(rng)) / x.norm();
    const double phi = x.norm();
    const BaseCoeffs c = base_coeffs(phi);
    const Mat3 sx = skew(x);
    const Mat3 x_form = Mat3::Identity() + 0.5 * c.beta * sx + c.delta * (sx * sx);
    const Mat3 xinv_form =
        Mat3::Identity() - 0.5 * sx + (1.0 - c.gamma) / (phi * phi) * (sx * sx);
    CHECK(max_abs(dexp_so3(x) - x_form) < 1e-14);
    CHECK(max_abs(dexpinv_so3(x) - xinv_form) < 1e-14);
  }
}

TEST_CASE("log_so3") {
  CHECK(log_so3(Mat3::Identity()).norm() == 0.0);

  Mat3 Rz;
  Rz << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK((log_so3(Rz) - Vec3(0, 0, kPi / 2)).norm() < 1e-15);

  std::uniform_real_distribution<double> norm(1e-6, 3.0);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    Vec3 x = testing::random_vec6(rng).head<3>();
    x *= norm(rng) / x.norm();
    worst = std::max(worst, (log_so3(exp_so3(x)) - x).norm());
  }
  CHECK(worst < 1e-11);

  // round trip through exp for matrices coming from the library
  Vec3 x(0.2, -1.1, 0.4);
  CHECK(max_abs(exp_so3(log_so3(exp_so3(x))) - exp_so3(x)) < 1e-10);
}

TEST_CASE("log_so3 rejects the antipode and non-orthonormal input") {
  CHECK_THROWS_AS(log_so3(exp_so3(Vec3(kPi - 1e-9, 0, 0))), std::domain_error);
  Mat3 M = Mat3::Identity();
  M(0, 1) = 1e-6;
  CHECK_THROWS_AS(log_so3(M), std::invalid_argument);
}

TEST_CASE("spatial angular velocity identity") {
  // (d/dt exp(x(t))) exp(x)^T == skew(dexp_x xdot)
  const Vec3 x0(0.3, -0.2, 0.9);
  const Vec3 xd(0.5, 1.1, -0.7);
  const double h = 1e-5;
  Mat3 Rdot = Mat3::Zero();
  const double w[4] = {-1.0, 8.0, -8.0, 1.0};
  const double st[4] = {2.0, 1.0, -1.0, -2.0};
  for (int i = 0; i < 4; ++i) Rdot += w[i] * exp_so3(x0 + st[i] * h * xd);
  Rdot /= 12.0 * h;
  const Mat3 lhs = Rdot * exp_so3(x0).transpose();
  CHECK(max_abs(lhs - skew(dexp_so3(x0) * xd)) < 1e-6);
}
