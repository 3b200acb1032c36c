#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-form SE(3) tangent operator toolkit"};
  app.require_subcommand(1);

  se3tan::cli::SweepSpec sweep;
  std::string errors_out = "errors.csv";
  auto* errors = app.add_subcommand("errors", "Approximation-error sweep along the study ray");
  errors->add_option("--s-min", sweep.s_min, "Smallest ray parameter");
  errors->add_option("--s-max", sweep.s_max, "Largest ray parameter");
  errors->add_option("--samples", sweep.samples, "Number of sweep samples");
  errors->add_flag("--log,!--linear", sweep.log_spacing, "Logarithmic sample spacing");
  errors->add_option("--targets", sweep.targets,
                     "Subset of targets (dexp dexpinv ddexp ddexpinv jac jacinv d2dexp "
                     "d2dexpinv hess hessinv)");
  errors->add_option("--out", errors_out, "Output CSV path");

  se3tan::cli::RodCommandConfig rod;
  std::string rod_out = "rod_out";
  auto* rodcmd = app.add_subcommand("rod", "Cosserat rod deformation study");
  rodcmd->add_option("--epsilon", rod.epsilon, "Switch threshold on ||x||");
  rodcmd->add_option("--order", rod.order, "Local approximation order");
  rodcmd->add_option("--tau-samples", rod.tau_samples, "Arc-length samples");
  rodcmd->add_option("--L", rod.length, "Rod length [mm]");
  rodcmd->add_option("--E", rod.youngs_modulus, "Young's modulus [MPa]");
  rodcmd->add_option("--G", rod.shear_modulus, "Shear modulus [MPa]");
  rodcmd->add_option("--width", rod.width, "Cross-section width [mm]");
  rodcmd->add_option("--height", rod.height, "Cross-section height [mm]");
  rodcmd->add_flag("--straight", rod.straight, "Undeformed straight rod instead of the demo field");
  rodcmd->add_option("--out-dir", rod_out, "Output directory");

  se3tan::cli::CheckOptions check;
  auto* checkcmd = app.add_subcommand("check", "Run the oracle self-check suites");
  checkcmd->add_flag("--verbose", check.verbose, "Print deviations for passing suites too");
  checkcmd->add_option("--inject-error", check.inject_error,
                       "Perturb one dexp entry by this amount (suite sensitivity self-test)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (errors->parsed()) {
      se3tan::cli::cmd_errors(sweep, errors_out);
      std::cout << "wrote " << errors_out << "\n";
      return 0;
    }
    if (rodcmd->parsed()) {
      se3tan::cli::cmd_rod(rod, rod_out);
      std::cout << "wrote rod study to " << rod_out << "/\n";
      return 0;
    }
    if (checkcmd->parsed()) {
      return se3tan::cli::cmd_check(check);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
