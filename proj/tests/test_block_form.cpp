#include <cmath>

#include <doctest.h>

#include "se3tangent/algebra.hpp"
#include "se3tangent/block_form.hpp"
#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/finite_difference.hpp"
#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/so3.hpp"
#include "support/oracles.hpp"

using namespace se3tan;
using testing::max_abs;

namespace {
std::mt19937_64 rng(707);
}

TEST_CASE("exp_block special cases and equivalence with exp_se3") {
  const Vec3 y(0.7, -0.1, 0.4);
  const Transform Ht = exp_block(screw(Vec3::Zero(), y));
  CHECK(max_abs(Ht.R - Mat3::Identity()) == 0.0);
  CHECK((Ht.r - y).norm() == 0.0);
  CHECK(max_abs(exp_block(Vec6::Zero()).matrix() - Mat4::Identity()) == 0.0);

  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Vec6 X = testing::random_screw(rng, 1e-3, 3.0);
    worst = std::max(worst, max_abs(exp_block(X).matrix() - exp_se3(X).matrix()));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("ddexp_so3_block limits and finite differences") {
  const Vec3 y(0.2, 0.9, -0.5);
  CHECK(max_abs(ddexp_so3_block(Vec3::Zero(), y) - 0.5 * skew(y)) == 0.0);
  CHECK(max_abs(ddexp_so3_block(Vec3::Zero(), y, Variant::dexpinv) + 0.5 * skew(y)) == 0.0);

  for (int t = 0; t < 10; ++t) {
    Vec3 x = testing::random_vec6(rng).head<3>();
    x *= (0.3 + 2.0 * std::abs(x.x())) / x.norm();
    const Vec3 d = testing::random_vec6(rng).head<3>();
    const Vec6 X6 = screw(x, Vec3::Zero());
    const Vec6 D6 = screw(d, Vec3::Zero());
    const Mat3 fd = fd_directional([](const Vec6& Y) { return dexp_so3(rotation_part(Y)); },
                                   X6, D6)
                        .topLeftCorner<3, 3>();
    CHECK(max_abs(ddexp_so3_block(x, d) - fd) < 1e-8);
    const Mat3 fdi = fd_directional(
                         [](const Vec6& Y) { return dexpinv_so3(rotation_part(Y)); }, X6, D6)
                         .topLeftCorner<3, 3>();
    CHECK(max_abs(ddexp_so3_block(x, d, Variant::dexpinv) - fdi) < 1e-8);
  }
}

TEST_CASE("ddexp_so3_block equals the lower-left block of the 6x6 tangent operator") {
  for (int t = 0; t < 20; ++t) {
    const Vec6 X = testing::random_screw(rng, 1e-2, 3.0);
    const Vec3 x = rotation_part(X);
    const Vec3 y = translation_part(X);
    CHECK(max_abs(Mat3(dexp(X).bottomLeftCorner<3, 3>()) - ddexp_so3_block(x, y)) < 1e-13);
    CHECK(max_abs(Mat3(dexpinv(X).bottomLeftCorner<3, 3>()) -
                  ddexp_so3_block(x, y, Variant::dexpinv)) < 1e-13);
  }
}

TEST_CASE("dexp_block assembles the full 6x6 operator") {
  double worst = 0.0, worst_inv = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Vec6 X = testing::random_screw(rng, 1e-3, 3.0);
    worst = std::max(worst, max_abs(dexp_block(X).assemble() - dexp(X)));
    worst_inv =
        std::max(worst_inv, max_abs(dexp_block(X, Variant::dexpinv).assemble() - dexpinv(X)));
  }
  CHECK(worst < 1e-11);
  CHECK(worst_inv < 1e-11);
}

TEST_CASE("ddexp_block limits at X = 0") {
  const Vec6 U = testing::random_vec6(rng);
  CHECK(max_abs(ddexp_block(Vec6::Zero(), U) - 0.5 * ad(U)) == 0.0);
  CHECK(max_abs(ddexp_block(Vec6::Zero(), U, Variant::dexpinv) + 0.5 * ad(U)) == 0.0);

  // x = 0 with y != 0 exercises the off-diagonal limit including the
  // (1/6)(~y~u + ~u~y) bracket
  const Vec6 X0 = screw(Vec3::Zero(), Vec3(0.4, -0.7, 0.2));
  CHECK(max_abs(ddexp_block(X0, U) - ddexp(X0, U)) < 1e-14);
  CHECK(max_abs(ddexp_block(X0, U, Variant::dexpinv) - ddexp(X0, U, Variant::dexpinv)) < 1e-14);
}

TEST_CASE("ddexp_block matches the 6x6 derivative on random screws") {
  double worst = 0.0, worst_inv = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Vec6 X = testing::random_screw(rng, 1e-3, 3.0);
    const Vec6 U = testing::random_vec6(rng);
    worst = std::max(worst, max_abs(ddexp_block(X, U) - ddexp(X, U)));
    worst_inv = std::max(worst_inv, max_abs(ddexp_block(X, U, Variant::dexpinv) -
                                            ddexp(X, U, Variant::dexpinv)));
  }
  CHECK(worst < 1e-11);
  CHECK(worst_inv < 1e-11);
}

TEST_CASE("adjudication of the inverse off-diagonal derivative block") {
  // The commonly printed closed form of (D_X Ddexpinv)(U) carries two
  // transcription slips.  This fixture evaluates that reading literally and
  // checks that it disagrees with finite differences, while the corrected
  // form implemented in ddexp_block agrees.
  const Vec6 X = testing::random_screw(rng, 0.8, 1.6);
  const Vec6 U = testing::random_vec6(rng);
  const Vec3 x = rotation_part(X), y = translation_part(X);
  const Vec3 u = rotation_part(U), v = translation_part(U);
  const double phi = x.norm();
  const BaseCoeffs b = base_coeffs(phi);
  const double p2 = phi * phi, p4 = p2 * p2, p6 = p4 * p2;
  const double xy = x.dot(y), xu = x.dot(u), xv = x.dot(v), yu = y.dot(u);
  const Mat3 sx = skew(x), sy = skew(y), su = skew(u), sv = skew(v);
  const Mat3 x2 = sx * sx;
  const double c = b.gamma + 1.0 / b.beta - 2.0;
  const Mat3 printed =
      -0.5 * sv + (1.0 - b.gamma) / p2 * (sx * sv + sv * sx + sy * su + su * sy) +
      0.25 * xu * (sx * sy + sy * sx) -
      ((1.0 - b.gamma) * (2.0 + b.gamma) * xu * (sx * sy + sy * sx) +
       c * (xy * (sx * su + su * sx) + (xv + yu) * x2) - 0.25 * xy * xu * x2) / p4 +
      xy * xu / p6 * (8.0 - 3.0 * b.gamma - b.gamma * b.gamma -
                      2.0 / (b.beta * b.beta) * (b.alpha + b.beta)) * x2;

  const Mat3 fd = fd_directional([](const Vec6& Y) { return dexpinv(Y); }, X, U)
                      .bottomLeftCorner<3, 3>();
  const Mat3 corrected = Mat3(ddexp_block(X, U, Variant::dexpinv).bottomLeftCorner<3, 3>());
  CHECK(max_abs(corrected - fd) < 1e-8);
  CHECK(max_abs(printed - fd) > 1e-3);
}
