#include <cmath>

#include <doctest.h>

#include "se3tangent/algebra.hpp"
#include "se3tangent/approximations.hpp"
#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "support/oracles.hpp"
#include "support/table_fixtures.hpp"

using namespace se3tan;
using testing::max_abs;

namespace {
std::mt19937_64 rng(606);

Vec6 study_ray(double s) {
  return s * screw(Vec3(0.3, -0.4, 1.0).normalized(), Vec3(0.1, 0.2, -0.4));
}
}  // namespace

TEST_CASE("P_ij special values and recursion") {
  const Vec6 X = testing::random_screw(rng, 0.4, 2.0);
  const Vec6 Z = testing::random_vec6(rng);
  CHECK(max_abs(P_ij(X, Z, 1, 0) + ad(Z)) == 0.0);
  CHECK(max_abs(P_ij(X, Z, 2, 0) + P_ij(X, Z, 2, 1) + ad(ad(X) * Z) + ad(X) * ad(Z)) < 1e-15);

  for (auto [i, j] : {std::pair{2, 0}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}}) {
    CHECK(max_abs(P_ij_recursive(X, Z, i, j) - P_ij(X, Z, i, j)) < 1e-14);
  }
  CHECK_THROWS_AS(P_ij(X, Z, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(P_ij(X, Z, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(P_ij_recursive(X, Z, 2, 1), std::invalid_argument);

  // defining property: P_ij(X, Z) U = P_j ad(U) P_{i-j-1} Z
  const auto P = ad_powers(X, 4);
  for (int t = 0; t < 10; ++t) {
    const Vec6 U = testing::random_vec6(rng);
    for (auto [i, j] : {std::pair{3, 1}, {4, 2}, {4, 0}}) {
      const Vec6 lhs = P_ij(X, Z, i, j) * U;
      const Vec6 rhs = P[static_cast<size_t>(j)] * (ad(U) * (P[static_cast<size_t>(i - j - 1)] * Z));
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("dexp_approx basics and convergence order") {
  const Vec6 X = testing::random_screw(rng, 0.8, 0.8);
  CHECK(max_abs(dexp_approx(X, 0) - Mat6::Identity()) == 0.0);
  CHECK(max_abs(dexp_approx(X, 1) - (Mat6::Identity() + 0.5 * ad(X))) == 0.0);
  CHECK_THROWS_AS(dexp_approx(X, 9), std::invalid_argument);

  // k = 2: log-log slope of the error is at least 2.75
  std::vector<double> ss, errs;
  for (double s = 1e-3; s <= 1e-1 * 1.0001; s *= std::pow(100.0, 1.0 / 12.0)) {
    ss.push_back(std::log(s));
    errs.push_back(std::log(max_abs(dexp_approx(study_ray(s), 2) - dexp(study_ray(s)))));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(ss.size());
  for (size_t i = 0; i < ss.size(); ++i) {
    sx += ss[i];
    sy += errs[i];
    sxx += ss[i] * ss[i];
    sxy += ss[i] * errs[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope >= 2.75);
}

TEST_CASE("order support per variant") {
  const Vec6 X = testing::random_screw(rng, 0.5, 1.5);
  const Vec6 U = testing::random_vec6(rng);
  const Vec6 S = testing::random_vec6(rng);
  const Vec6 Z = testing::random_vec6(rng);
  const Vec6 Q = testing::random_vec6(rng);

  // the inverse family's order-2 first derivative aliases order 1 exactly
  CHECK(max_abs(ddexp_approx(X, U, 2, Variant::dexpinv) -
                ddexp_approx(X, U, 1, Variant::dexpinv)) == 0.0);
  CHECK(max_abs(jac_eval_approx(X, Z, 2, Variant::dexpinv) -
                jac_eval_approx(X, Z, 1, Variant::dexpinv)) == 0.0);

  CHECK_THROWS_AS(ddexp_approx(X, U, 4), std::invalid_argument);
  CHECK_THROWS_AS(d2dexp_approx(X, U, S, 3), std::invalid_argument);
  CHECK_THROWS_AS(d2dexp_approx(X, U, S, 1, Variant::dexpinv), std::invalid_argument);
  CHECK_THROWS_AS(hessian_approx(X, Q, Z, 1, Variant::dexpinv), std::invalid_argument);
  CHECK_NOTHROW(d2dexp_approx(X, U, S, 2, Variant::dexpinv));
}

TEST_CASE("printed table rows match the generated truncations") {
  const Vec6 X = testing::random_screw(rng, 0.9, 0.9);
  const Vec6 Z = testing::random_vec6(rng);
  const Vec6 U = testing::random_vec6(rng);
  const Vec6 S = testing::random_vec6(rng);
  const Vec6 Q = testing::random_vec6(rng);
  for (const auto& row : testing::table_rows(X, Z, U, S, Q)) {
    CAPTURE(row.name);
    const double scale = std::max(1.0, max_abs(row.printed));
    CHECK(max_abs(row.printed - row.generated) / scale < 1e-15);
  }
}

TEST_CASE("error ordering in the approximation order at s = 1e-2") {
  const Vec6 X = study_ray(1e-2);
  const Vec6 U = testing::random_vec6(rng);
  double prev = 1e100;
  for (int k = 0; k <= 3; ++k) {
    const double err = max_abs(ddexp_approx(X, U, k) - ddexp(X, U));
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("robust evaluation switches and clamps") {
  const Vec6 U = testing::random_vec6(rng);
  const Vec6 S = testing::random_vec6(rng);
  const Vec6 Z = testing::random_vec6(rng);
  const Vec6 Q = testing::random_vec6(rng);
  const SwitchPolicy policy{1e-4, -1};

  // above the threshold the exact closed form is returned bit for bit
  const Vec6 Xbig = study_ray(2e-4);
  CHECK((robust_dexp(Xbig, policy) - dexp(Xbig)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((robust_ddexp(Xbig, U, policy) - ddexp(Xbig, U)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((robust_jac_eval(Xbig, Z, policy) - jac_eval(Xbig, Z)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((robust_hessian(Xbig, Q, Z, policy) - hessian_eval(Xbig, Q, Z)).cwiseAbs().maxCoeff() ==
        0.0);

  // at the origin the truncation reproduces the limits exactly
  CHECK(max_abs(robust_ddexp(Vec6::Zero(), U, policy) - 0.5 * ad(U)) == 0.0);
  CHECK(max_abs(robust_ddexp(Vec6::Zero(), U, policy, Variant::dexpinv) + 0.5 * ad(U)) == 0.0);

  // explicit orders are clamped to the supported set
  const Vec6 Xsmall = study_ray(1e-5);
  const SwitchPolicy k3{1e-4, 3};
  CHECK(max_abs(robust_hessian(Xsmall, Q, Z, k3) - hessian_approx(Xsmall, Q, Z, 2)) == 0.0);
  const SwitchPolicy k1{1e-4, 1};
  CHECK(max_abs(robust_d2dexp(Xsmall, U, S, k1, Variant::dexpinv) -
                d2dexp_approx(Xsmall, U, S, 0, Variant::dexpinv)) == 0.0);
  CHECK_THROWS_AS(robust_dexp(Xsmall, SwitchPolicy{0.0, -1}), std::invalid_argument);
}

TEST_CASE("inverse-family approximations are more accurate on the study ray") {
  const Vec6 U = (Vec6() << 0.1, 1.0, -1.0, 0.9, 0.5, 0.3).finished();
  for (double s : {1e-2, 5e-2}) {
    const Vec6 X = study_ray(s);
    for (int k : {0, 1}) {
      const double e = max_abs(ddexp_approx(X, U, k) - ddexp(X, U));
      const double ei = max_abs(ddexp_approx(X, U, k, Variant::dexpinv) -
                                ddexp(X, U, Variant::dexpinv));
      CHECK(ei < e);
    }
  }
}
