#pragma once

#include <string>
#include <vector>

#include "se3tangent/types.hpp"

namespace se3tan::cli {

/// Fixed screw/direction vectors of the error studies; X(s) = s * [n; y]
/// with n the normalized x.
struct StudyVectors {
  Vec3 x{0.3, -0.4, 1.0};
  Vec3 y{0.1, 0.2, -0.4};
  Vec6 U{(Vec6() << 0.1, 1.0, -1.0, 0.9, 0.5, 0.3).finished()};
  Vec6 S{(Vec6() << 1.7, -2.9, -9.2, 7.6, 6.7, 2.4).finished()};

  Vec6 ray(double s) const;
};

struct SweepSpec {
  double s_min = 1e-3;
  double s_max = 1e-1;
  int samples = 25;
  bool log_spacing = true;
  std::vector<std::string> targets;  // empty = all
};

/// Approximation-error sweep over X(s); one column per (target, order).
/// Returns the resolved (target, order) column labels.
std::vector<std::string> cmd_errors(const SweepSpec& spec, const std::string& out_path);

struct RodCommandConfig {
  double epsilon = 1e-5;
  int order = 2;
  int tau_samples = 201;
  double length = 100.0;
  double youngs_modulus = 10.0;
  double shear_modulus = 0.3;
  double width = 8.0;
  double height = 8.0;
  bool straight = false;  ///< undeformed straight rod instead of the demo field
};

/// Rod study: deformation, strain rates, potential gradient/Hessian along
/// the rod, each with naive closed-form and robust switched columns, plus
/// the switching-error study near tau = 0.5.  Writes chi.csv,
/// chi_rates.csv, potential.csv, switching_error.csv into out_dir.
void cmd_rod(const RodCommandConfig& config, const std::string& out_dir);

struct CheckOptions {
  bool verbose = false;
  double inject_error = 0.0;  ///< perturbation of one dexp entry, self-test of suite sensitivity
};

/// Full oracle suite (limits, series, block form, finite differences,
/// invariants); prints one line per suite and returns 0 iff all pass.
int cmd_check(const CheckOptions& options);

}  // namespace se3tan::cli
