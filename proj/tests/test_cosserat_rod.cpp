#include <cmath>

#include <doctest.h>

#include "se3tangent/cosserat_rod.hpp"
#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/finite_difference.hpp"
#include "support/oracles.hpp"

using namespace se3tan;
using testing::max_abs;

namespace {

std::mt19937_64 rng(909);

const RodReference& reference() {
  static const RodReference rod;
  return rod;
}

}  // namespace

TEST_CASE("stiffness matrix of the default rod") {
  const RodConfig rc;
  const Mat6 K = rc.stiffness();
  CHECK(rc.area() == 64.0);
  CHECK(rc.area_moment_yy() == doctest::Approx(8.0 * 512.0 / 12.0));
  CHECK(rc.polar_moment() == doctest::Approx(2.0 * 8.0 * 512.0 / 12.0));
  CHECK(K(0, 0) == doctest::Approx(0.3 * rc.polar_moment() / 100.0));
  CHECK(K(1, 1) == doctest::Approx(10.0 * rc.area_moment_yy() / 100.0));
  CHECK(K(3, 3) == doctest::Approx(10.0 * 64.0 / 100.0));
  CHECK(K(4, 4) == doctest::Approx(0.3 * 64.0 / 100.0));
  CHECK((K - Mat6(K.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("prescribed displacement") {
  const auto d0 = prescribed_displacement(0.0);
  CHECK((d0.x - Vec3(0.0, 0.5, 0.0)).norm() == 0.0);
  CHECK((d0.rho - Vec3(1.0, 0.0, 0.0)).norm() == 0.0);

  const auto dh = prescribed_displacement(0.5);
  CHECK(dh.x.norm() < 1e-15);

  // frozen golden values from a 30-digit evaluation of the trigonometric field
  const auto dq = prescribed_displacement(0.25);
  CHECK((dq.x - Vec3(0.5, 0.35355339059327376220, 0.5)).norm() < 1e-15);
  CHECK((dq.rho - Vec3(0.99500416527802576610, 0.053940225216975975745,
                       0.084006923422543534357)).norm() < 1e-15);

  CHECK_THROWS_AS(prescribed_displacement(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(prescribed_displacement(1.01), std::invalid_argument);
}

TEST_CASE("reference field construction") {
  const RodReference& rod = reference();

  // quadrature starts at r(0) = 0, so the screw has no translation part there
  CHECK(translation_part(rod.screw(0.0)).norm() < 1e-14);

  // x(0.5) = 0, so the screw is a pure translation there
  CHECK(rotation_part(rod.screw(0.5)).norm() < 1e-13);

  for (double tau : {0.0, 0.17, 0.33, 0.5, 0.71, 1.0}) {
    const Transform H = rod.pose(tau);
    const Transform He = exp_se3(rod.screw(tau));
    CHECK(max_abs(He.matrix() - H.matrix()) < 1e-10);
  }
}

TEST_CASE("build_reference returns samples for a whole grid") {
  const RodReference& rod = reference();
  const std::vector<double> grid{0.12, 0.5, 0.81};
  const auto samples = rod.build_reference(grid);
  REQUIRE(samples.size() == 3);
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(samples[i].tau == grid[i]);
    CHECK((samples[i].X - rod.screw(grid[i])).norm() == 0.0);
    CHECK(samples[i].Xd.allFinite());
  }
}

TEST_CASE("reference derivatives converge under step halving of the quadrature") {
  const RodReference coarse(1000);
  const RodReference fine(2000);
  for (double tau : {0.21, 0.64}) {
    const RodSample a = coarse.sample(tau);
    const RodSample b = fine.sample(tau);
    CHECK((a.Xd - b.Xd).norm() < 1e-9);
    CHECK((a.Xdd - b.Xdd).norm() < 1e-7);
    CHECK((a.Xddd - b.Xddd).norm() < 1e-5);
  }
}

TEST_CASE("deformation of a straight rod") {
  const Vec3 c(0.0, 0.0, 1.0);
  for (double tau : {0.1, 0.6}) {
    const Vec6 X = screw(Vec3::Zero(), tau * c);
    const Vec6 Xd = screw(Vec3::Zero(), c);
    CHECK((deformation(X, Xd) - Xd).norm() == 0.0);
    const DeformationRates r = deformation_rates(X, Xd, Vec6::Zero(), Vec6::Zero());
    CHECK(r.chi_d.norm() < 1e-15);
    CHECK(r.chi_dd.norm() < 1e-15);
  }
}

TEST_CASE("deformation matches the direct kinematic definition") {
  const RodReference& rod = reference();
  for (double tau : {0.1, 0.25, 0.42, 0.77, 0.93}) {
    const RodSample s = rod.sample(tau);
    const Vec6 chi = deformation(s.X, s.Xd);
    CHECK((chi - rod.deformation_direct(tau)).cwiseAbs().maxCoeff() < 1e-8);
  }

  // at the interior zero of x the switched evaluation stays finite and
  // still matches the direct route
  const SwitchPolicy policy{1e-5, 2};
  const RodSample mid = rod.sample(0.5);
  const Vec6 chi_mid = deformation(mid.X, mid.Xd, policy);
  CHECK(chi_mid.allFinite());
  CHECK((chi_mid - rod.deformation_direct(0.5)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("deformation is invariant under a change of global frame") {
  // chi from H and from H0 * H agree; computed through the (R, r) path with
  // arc-length finite differences of the pose
  const RodReference& rod = reference();
  const Transform H0 = exp_se3(screw(Vec3(0.3, 0.8, -0.2), Vec3(5.0, -2.0, 1.0)));
  const double tau = 0.37, h = 1e-5;
  auto chihat = [&](const Transform& pre) {
    Mat4 Hd = Mat4::Zero();
    const double w[4] = {-1.0, 8.0, -8.0, 1.0};
    const double st[4] = {2.0, 1.0, -1.0, -2.0};
    for (int i = 0; i < 4; ++i) Hd += w[i] * (pre * rod.pose(tau + st[i] * h)).matrix();
    Hd /= 12.0 * h;
    return Mat4((pre * rod.pose(tau)).matrix().inverse() * Hd);
  };
  CHECK(max_abs(chihat(Transform::Identity()) - chihat(H0)) < 1e-10);
}

TEST_CASE("deformation rates match arc-length finite differences") {
  const RodReference& rod = reference();
  const double tau = 0.3, h = 1e-4;
  auto chi_of = [&](double t) {
    const RodSample s = rod.sample(t);
    return Vec6(deformation(s.X, s.Xd));
  };
  const Vec6 chid_fd =
      (-chi_of(tau + 2 * h) + 8.0 * chi_of(tau + h) - 8.0 * chi_of(tau - h) + chi_of(tau - 2 * h)) /
      (12.0 * h);
  const RodSample s = rod.sample(tau);
  const DeformationRates r = deformation_rates(s.X, s.Xd, s.Xdd, s.Xddd);
  CHECK((r.chi_d - chid_fd).cwiseAbs().maxCoeff() < 1e-6);

  auto chid_of = [&](double t) {
    const RodSample st = rod.sample(t);
    return Vec6(deformation_rates(st.X, st.Xd, st.Xdd, st.Xddd).chi_d);
  };
  const double h2 = 5e-4;
  const Vec6 chidd_fd = (-chid_of(tau + 2 * h2) + 8.0 * chid_of(tau + h2) -
                         8.0 * chid_of(tau - h2) + chid_of(tau - 2 * h2)) /
                        (12.0 * h2);
  CHECK((r.chi_dd - chidd_fd).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("naive closed forms break down at the interior zero of x") {
  // at tau = 0.5 the logged rotation vector has norm ~1e-17: the raw
  // divisions by powers of phi turn the naive coefficients into garbage
  // (0/0-style artifacts of Fig-4 kind), while the switched path stays clean
  const RodReference& rod = reference();
  const SwitchPolicy policy{1e-5, 2};
  for (double tau : {0.5, 0.5 + 2e-7}) {
    const RodSample s = rod.sample(tau);
    const DeformationRates nv = deformation_rates_naive(s.X, s.Xd, s.Xdd, s.Xddd);
    const DeformationRates rb = deformation_rates(s.X, s.Xd, s.Xdd, s.Xddd, policy);
    CHECK(rb.chi_d.allFinite());
    CHECK((!nv.chi_d.allFinite() || (nv.chi_d - rb.chi_d).cwiseAbs().maxCoeff() > 1e-3));
  }
}

TEST_CASE("switched evaluation is continuous across the switching boundary") {
  const RodReference& rod = reference();
  const SwitchPolicy policy{1e-5, 2};
  // bisect the boundary ||x(tau)|| = epsilon right of tau = 0.5
  double lo = 0.5, hi = 0.51;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (rotation_part(rod.screw(mid)).norm() < policy.epsilon ? lo : hi) = mid;
  }
  auto chid_at = [&](double t) {
    const RodSample s = rod.sample(t);
    return Vec6(deformation_rates(s.X, s.Xd, s.Xdd, s.Xddd, policy).chi_d);
  };
  const double jump = (chid_at(hi + 1e-12) - chid_at(lo - 1e-12)).cwiseAbs().maxCoeff();
  CHECK(jump < 1e-8);
}

TEST_CASE("potential gradient and Hessian") {
  const RodConfig rc;
  const Mat6 K = rc.stiffness();
  const RodReference& rod = reference();
  const Vec6 chi0 = (Vec6() << 0, 0, 0, 1, 0, 0).finished();

  // at chi = chi0 the gradient vanishes and the Hessian reduces to J^T K J
  {
    const Vec3 c(0.0, 0.0, 1.0);
    const Vec6 X = screw(Vec3::Zero(), 0.4 * c);
    const Vec6 Xd = (Vec6() << 0, 0, 0, 1, 0, 0).finished();
    CHECK(potential_gradient(X, Xd, chi0, K).norm() < 1e-15);
    const Mat6 J = deformation_jacobian(X, Xd);
    const Mat6 H = potential_hessian(X, Xd, chi0, K);
    CHECK(max_abs(H - J.transpose() * K * J) < 1e-13);
    const Eigen::SelfAdjointEigenSolver<Mat6> es(H);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }

  for (double tau : {0.2, 0.66}) {
    const RodSample s = rod.sample(tau);
    auto Vbar = [&](const Vec6& Y) {
      const Vec6 e = deformation(Y, s.Xd) - chi0;
      return 0.5 * e.dot(K * e);
    };
    const Vec6 g = potential_gradient(s.X, s.Xd, chi0, K);
    for (int j = 0; j < 6; ++j) {
      CHECK(std::abs(g(j) - fd_directional(Vbar, s.X, Vec6::Unit(j))) < 1e-5);
    }
    const Mat6 H = potential_hessian(s.X, s.Xd, chi0, K);
    CHECK(max_abs(H - H.transpose()) < 1e-12);
    Mat6 Hfd;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) Hfd(i, j) = fd_second(Vbar, s.X, Vec6::Unit(j), Vec6::Unit(i));
    CHECK(max_abs(H - Hfd) < 1e-5);
  }
}

TEST_CASE("gradient through the Jacobian equals six directional derivatives") {
  const RodConfig rc;
  const Mat6 K = rc.stiffness();
  const Vec6 chi0 = (Vec6() << 0, 0, 0, 1, 0, 0).finished();
  const RodSample s = reference().sample(0.31);
  const Vec6 e = deformation(s.X, s.Xd) - chi0;
  const Vec6 g = potential_gradient(s.X, s.Xd, chi0, K);
  for (int j = 0; j < 6; ++j) {
    // (D chi)(e_j) = -ddexp(-X, e_j) Xd
    const Vec6 dchij = -(ddexp(-s.X, Vec6::Unit(j)) * s.Xd);
    CHECK(std::abs(g(j) - e.dot(K * dchij)) < 1e-11);
  }
}

TEST_CASE("potential gradient and Hessian stay continuous across tau = 0.5 when switched") {
  const RodConfig rc;
  const Mat6 K = rc.stiffness();
  const Vec6 chi0 = (Vec6() << 0, 0, 0, 1, 0, 0).finished();
  const RodReference& rod = reference();
  const SwitchPolicy policy{1e-5, 3};  // order clamps to the supported Hessian order

  double lo = 0.5, hi = 0.51;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (rotation_part(rod.screw(mid)).norm() < policy.epsilon ? lo : hi) = mid;
  }
  auto eval = [&](double t) {
    const RodSample s = rod.sample(t);
    const Vec6 g = potential_gradient(s.X, s.Xd, chi0, K, policy);
    const Mat6 H = potential_hessian(s.X, s.Xd, chi0, K, policy);
    return std::pair<Vec6, double>(g, H.norm());
  };
  const auto [g_lo, h_lo] = eval(lo - 1e-12);
  const auto [g_hi, h_hi] = eval(hi + 1e-12);
  CHECK((g_hi - g_lo).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(std::abs(h_hi - h_lo) < 1e-8);

  // the naive path meanwhile is corrupted at tau = 0.5 itself
  const RodSample mid = rod.sample(0.5);
  const Vec6 g_naive = potential_gradient_naive(mid.X, mid.Xd, chi0, K);
  const Vec6 g_robust = potential_gradient(mid.X, mid.Xd, chi0, K, policy);
  CHECK((!g_naive.allFinite() || (g_naive - g_robust).cwiseAbs().maxCoeff() > 1e-3));
}
