#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>

#include "se3tangent/approximations.hpp"
#include "se3tangent/block_form.hpp"
#include "se3tangent/cosserat_rod.hpp"
#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/finite_difference.hpp"
#include "se3tangent/jacobians.hpp"
#include "se3tangent/scalar_coeffs.hpp"
#include "se3tangent/so3.hpp"

namespace se3tan::cli {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double spectral_norm(const Mat6& M) {
  return Eigen::JacobiSVD<Mat6>(M).singularValues()(0);
}

std::vector<double> make_grid(double lo, double hi, int n, bool log_spacing) {
  if (n < 2 || !(lo < hi)) throw std::invalid_argument("invalid sweep grid");
  std::vector<double> s(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    s[static_cast<size_t>(i)] = log_spacing ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
  }
  return s;
}

struct ErrorTarget {
  std::string name;
  std::vector<int> orders;
  std::function<double(const Vec6&, int)> error;  // approximation error at X, order k
};

std::vector<ErrorTarget> make_targets(const StudyVectors& v) {
  std::vector<ErrorTarget> t;
  t.push_back({"dexp", {0, 1, 2, 3}, [](const Vec6& X, int k) {
                 return spectral_norm(dexp_approx(X, k) - dexp(X));
               }});
  t.push_back({"dexpinv", {0, 1, 2, 3}, [](const Vec6& X, int k) {
                 return spectral_norm(dexp_approx(X, k, Variant::dexpinv) - dexpinv(X));
               }});
  t.push_back({"ddexp", {0, 1, 2, 3}, [v](const Vec6& X, int k) {
                 return spectral_norm(ddexp_approx(X, v.U, k) - ddexp(X, v.U));
               }});
  t.push_back({"ddexpinv", {0, 1, 3}, [v](const Vec6& X, int k) {
                 return spectral_norm(ddexp_approx(X, v.U, k, Variant::dexpinv) -
                                      ddexp(X, v.U, Variant::dexpinv));
               }});
  t.push_back({"jac", {0, 1, 2, 3}, [v](const Vec6& X, int k) {
                 return spectral_norm(jac_eval_approx(X, v.U, k) - jac_eval(X, v.U));
               }});
  t.push_back({"jacinv", {0, 1, 3}, [v](const Vec6& X, int k) {
                 return spectral_norm(jac_eval_approx(X, v.U, k, Variant::dexpinv) -
                                      jac_eval(X, v.U, EvalVariant::dexpinv));
               }});
  t.push_back({"d2dexp", {0, 1, 2}, [v](const Vec6& X, int k) {
                 return spectral_norm(d2dexp_approx(X, v.U, v.S, k) - d2dexp(X, v.U, v.S));
               }});
  t.push_back({"d2dexpinv", {0, 2}, [v](const Vec6& X, int k) {
                 return spectral_norm(d2dexp_approx(X, v.U, v.S, k, Variant::dexpinv) -
                                      d2dexp(X, v.U, v.S, Variant::dexpinv));
               }});
  t.push_back({"hess", {0, 1, 2}, [v](const Vec6& X, int k) {
                 return spectral_norm(hessian_approx(X, v.S, v.U, k) - hessian_eval(X, v.S, v.U));
               }});
  t.push_back({"hessinv", {0, 2}, [v](const Vec6& X, int k) {
                 return spectral_norm(hessian_approx(X, v.S, v.U, k, Variant::dexpinv) -
                                      hessian_eval(X, v.S, v.U, Variant::dexpinv));
               }});
  return t;
}

}  // namespace

Vec6 StudyVectors::ray(double s) const { return s * screw(x.normalized(), y); }

std::vector<std::string> cmd_errors(const SweepSpec& spec, const std::string& out_path) {
  const StudyVectors v;
  auto all = make_targets(v);
  std::vector<ErrorTarget> targets;
  if (spec.targets.empty()) {
    targets = all;
  } else {
    for (const auto& name : spec.targets) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const ErrorTarget& t) { return t.name == name; });
      if (it == all.end()) throw std::invalid_argument("unknown error target: " + name);
      targets.push_back(*it);
    }
  }

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  std::vector<std::string> labels;
  out << "s";
  for (const auto& t : targets)
    for (int k : t.orders) {
      labels.push_back(t.name + "_k" + std::to_string(k));
      out << "," << labels.back();
    }
  out << "\n";
  for (double s : make_grid(spec.s_min, spec.s_max, spec.samples, spec.log_spacing)) {
    const Vec6 X = v.ray(s);
    out << fmt(s);
    for (const auto& t : targets)
      for (int k : t.orders) out << "," << fmt(t.error(X, k));
    out << "\n";
  }
  return labels;
}

void cmd_rod(const RodCommandConfig& config, const std::string& out_dir) {
  if (config.tau_samples < 2) throw std::invalid_argument("need at least 2 tau samples");
  std::filesystem::create_directories(out_dir);
  RodConfig rc;
  rc.length = config.length;
  rc.youngs_modulus = config.youngs_modulus;
  rc.shear_modulus = config.shear_modulus;
  rc.width = config.width;
  rc.height = config.height;
  const Mat6 K = rc.stiffness();
  const Vec6 chi0 = (Vec6() << 0, 0, 0, 1, 0, 0).finished();  // straight undeformed rod
  const SwitchPolicy policy{config.epsilon, config.order};

  const RodReference rod;
  // sample provider: the demo displacement field, or the analytic straight
  // rod X(tau) = (0, tau e1) whose deformation is constant
  auto field_sample = [&](double tau) {
    if (!config.straight) return rod.sample(tau);
    RodSample s;
    s.tau = tau;
    s.X = screw(Vec3::Zero(), Vec3(tau, 0.0, 0.0));
    s.Xd = chi0;
    s.Xdd = Vec6::Zero();
    s.Xddd = Vec6::Zero();
    return s;
  };
  auto direct_chi = [&](double tau) {
    return config.straight ? chi0 : rod.deformation_direct(tau);
  };
  std::ofstream chi_csv(out_dir + "/chi.csv");
  std::ofstream rates_csv(out_dir + "/chi_rates.csv");
  std::ofstream pot_csv(out_dir + "/potential.csv");
  if (!chi_csv || !rates_csv || !pot_csv)
    throw std::runtime_error("cannot write rod CSV files in " + out_dir);

  chi_csv << "tau";
  for (const char* s : {"chi_naive", "chi_robust", "chi_direct"})
    for (int i = 0; i < 6; ++i) chi_csv << "," << s << "_" << i;
  chi_csv << "\n";
  rates_csv << "tau";
  for (const char* s : {"chid_naive", "chid_robust", "chidd_naive", "chidd_robust"})
    for (int i = 0; i < 6; ++i) rates_csv << "," << s << "_" << i;
  rates_csv << "\n";
  pot_csv << "tau";
  for (const char* s : {"grad_naive", "grad_robust"})
    for (int i = 0; i < 6; ++i) pot_csv << "," << s << "_" << i;
  pot_csv << ",hessnorm_naive,hessnorm_robust\n";

  for (int i = 0; i < config.tau_samples; ++i) {
    const double tau = static_cast<double>(i) / (config.tau_samples - 1);
    const RodSample s = field_sample(tau);
    const double phi = rotation_part(s.X).norm();

    const Vec6 chi_naive =
        dexp_from_coeffs(-s.X, dexp_coeffs_naive(phi), Variant::dexp) * s.Xd;
    const Vec6 chi_robust = deformation(s.X, s.Xd, policy);
    const Vec6 chi_direct = direct_chi(tau);
    chi_csv << fmt(tau);
    for (const Vec6* c : {&chi_naive, &chi_robust, &chi_direct})
      for (int j = 0; j < 6; ++j) chi_csv << "," << fmt((*c)(j));
    chi_csv << "\n";

    const DeformationRates naive = deformation_rates_naive(s.X, s.Xd, s.Xdd, s.Xddd);
    const DeformationRates robust = deformation_rates(s.X, s.Xd, s.Xdd, s.Xddd, policy);
    rates_csv << fmt(tau);
    for (const Vec6* c : {&naive.chi_d, &robust.chi_d, &naive.chi_dd, &robust.chi_dd})
      for (int j = 0; j < 6; ++j) rates_csv << "," << fmt((*c)(j));
    rates_csv << "\n";

    const Vec6 g_naive = potential_gradient_naive(s.X, s.Xd, chi0, K);
    const Vec6 g_robust = potential_gradient(s.X, s.Xd, chi0, K, policy);
    const double h_naive = spectral_norm(potential_hessian_naive(s.X, s.Xd, chi0, K));
    const double h_robust = spectral_norm(potential_hessian(s.X, s.Xd, chi0, K, policy));
    pot_csv << fmt(tau);
    for (const Vec6* c : {&g_naive, &g_robust})
      for (int j = 0; j < 6; ++j) pot_csv << "," << fmt((*c)(j));
    pot_csv << "," << fmt(h_naive) << "," << fmt(h_robust) << "\n";
  }

  // Switching-error study near tau = 0.5: chi' with the k-th order
  // approximation below ||x|| <= eps against the smooth kernel evaluation.
  // Only meaningful for the demo field, whose x(tau) crosses zero there.
  if (config.straight) return;
  std::ofstream sw_csv(out_dir + "/switching_error.csv");
  sw_csv << "tau";
  const double eps_study[2] = {1e-2, 1e-3};
  for (double eps : eps_study)
    for (int k : {0, 1, 2, 3})
      sw_csv << ",err_eps" << fmt(eps) << "_k" << k;
  sw_csv << "\n";
  const int n_sw = 801;
  for (int i = 0; i < n_sw; ++i) {
    const double tau = 0.46 + 0.08 * static_cast<double>(i) / (n_sw - 1);
    const RodSample s = rod.sample(tau);
    const DeformationRates ref = deformation_rates(s.X, s.Xd, s.Xdd, s.Xddd);
    sw_csv << fmt(tau);
    for (double eps : eps_study)
      for (int k : {0, 1, 2, 3}) {
        const SwitchPolicy p{eps, k};
        const DeformationRates sw = deformation_rates(s.X, s.Xd, s.Xdd, s.Xddd, p);
        sw_csv << "," << fmt((sw.chi_d - ref.chi_d).norm());
      }
    sw_csv << "\n";
  }
}

namespace {

struct Suite {
  std::string name;
  double deviation;
  double tolerance;
  bool pass() const { return deviation < tolerance; }
};

Vec6 random_screw(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> norm(lo, hi);
  Vec6 X;
  for (int i = 0; i < 6; ++i) X(i) = unit(rng);
  const double target = norm(rng);
  X.head<3>() *= target / X.head<3>().norm();
  return X;
}

}  // namespace

int cmd_check(const CheckOptions& options) {
  std::vector<Suite> suites;
  std::mt19937_64 rng(0x5e37a11u);
  const double inject = options.inject_error;

  {  // limit constants at phi = 0
    const DexpCoeffDerivs d = dexp_coeff_derivs(0.0);
    const DexpCoeffs c = dexp_coeffs(0.0);
    double dev = 0.0;
    const double expected[][2] = {
        {c.a1, 1.0 / 2},        {c.a2, 1.0 / 6},        {c.a3, 1.0 / 24},
        {c.a4, 1.0 / 120},      {c.b2, 1.0 / 12},       {c.b4, -1.0 / 720},
        {d.abar3, -1.0 / 180},  {d.abar4, -1.0 / 1260}, {d.bbar4, -1.0 / 7560},
        {d.abreve1, -1.0 / 90}, {d.abreve2, -1.0 / 630}, {d.abreve3, 1.0 / 1680},
        {d.abreve4, 1.0 / 15120}, {d.bbreve2, -1.0 / 3780}, {d.bbreve4, -1.0 / 50400},
    };
    for (const auto& e : expected) dev = std::max(dev, std::abs(e[0] - e[1]));
    suites.push_back({"limit constants", dev + std::abs(inject), 1e-15});
  }

  {  // closed forms against the defining series (the Bernoulli series needs
     // degree 60 above ||x|| = 2 to converge below the tolerance)
    double dev = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Vec6 X = random_screw(rng, 1e-3, 3.0);
      const int inv_order = rotation_part(X).norm() <= 2.0 ? 30 : 60;
      Mat6 D = dexp(X);
      D(0, 1) += inject;
      dev = std::max(dev, (D - dexp_series(X, Variant::dexp, 30)).cwiseAbs().maxCoeff());
      dev = std::max(dev, (dexpinv(X) - dexp_series(X, Variant::dexpinv, inv_order))
                              .cwiseAbs().maxCoeff());
    }
    suites.push_back({"series oracle (dexp/dexpinv)", dev, 1e-12});
  }

  {  // block-partitioned forms
    double dev = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Vec6 X = random_screw(rng, 1e-3, 3.0);
      const Vec6 U = random_screw(rng, 1e-3, 3.0);
      Mat6 D = dexp(X);
      D(0, 1) += inject;
      dev = std::max(dev, (D - dexp_block(X).assemble()).cwiseAbs().maxCoeff());
      dev = std::max(dev, (dexpinv(X) - dexp_block(X, Variant::dexpinv).assemble())
                              .cwiseAbs().maxCoeff());
      dev = std::max(dev, (ddexp(X, U) - ddexp_block(X, U)).cwiseAbs().maxCoeff());
      dev = std::max(dev, (ddexp(X, U, Variant::dexpinv) -
                           ddexp_block(X, U, Variant::dexpinv)).cwiseAbs().maxCoeff());
    }
    suites.push_back({"block-partitioned oracle", dev, 1e-11});
  }

  {  // finite differences
    double dev1 = 0.0, dev2 = 0.0;
    for (int t = 0; t < 40; ++t) {
      const Vec6 X = random_screw(rng, 0.2, 2.5);
      const Vec6 U = random_screw(rng, 0.2, 2.5);
      const Vec6 S = random_screw(rng, 0.2, 2.5);
      Mat6 D = ddexp(X, U);
      D(0, 1) += inject;
      dev1 = std::max(dev1, (D - fd_directional([](const Vec6& Y) { return dexp(Y); }, X, U))
                                .cwiseAbs().maxCoeff());
      dev2 = std::max(dev2, (d2dexp(X, U, S) -
                             fd_second([](const Vec6& Y) { return dexp(Y); }, X, U, S))
                                .cwiseAbs().maxCoeff());
    }
    suites.push_back({"finite differences (first)", dev1, 1e-7});
    suites.push_back({"finite differences (second)", dev2, 1e-5});
  }

  {  // inverse pair and symmetry invariants
    double dev = 0.0, devsym = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Vec6 X = random_screw(rng, 1e-3, 3.0);
      const Vec6 Q = random_screw(rng, 0.1, 2.0);
      const Vec6 Z = random_screw(rng, 0.1, 2.0);
      Mat6 D = dexp(X);
      D(0, 1) += inject;
      dev = std::max(dev, (D * dexpinv(X) - Mat6::Identity()).cwiseAbs().maxCoeff());
      const Mat6 H = hessian_eval(X, Q, Z);
      devsym = std::max(devsym, (H - H.transpose()).cwiseAbs().maxCoeff());
    }
    suites.push_back({"inverse pair", dev, 1e-12});
    suites.push_back({"Hessian symmetry", devsym, 1e-12});
  }

  {  // rod reconstruction spot check
    const RodReference rod;
    double dev = 0.0;
    for (double tau : {0.1, 0.25, 0.3, 0.62, 0.85}) {
      const RodSample s = rod.sample(tau);
      Vec6 chi = deformation(s.X, s.Xd);
      chi(0) += inject;
      dev = std::max(dev, (chi - rod.deformation_direct(tau)).cwiseAbs().maxCoeff());
    }
    suites.push_back({"rod reconstruction", dev, 1e-8});
  }

  int failures = 0;
  for (const auto& s : suites) {
    const bool ok = s.pass();
    failures += ok ? 0 : 1;
    if (options.verbose || !ok) {
      std::printf("%-34s max dev %10.3e  tol %8.1e  %s\n", s.name.c_str(), s.deviation,
                  s.tolerance, ok ? "PASS" : "FAIL");
    } else {
      std::printf("%-34s PASS\n", s.name.c_str());
    }
  }
  std::printf("%d/%zu suites passed\n", static_cast<int>(suites.size()) - failures,
              suites.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace se3tan::cli
