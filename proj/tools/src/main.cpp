#include <iostream>

#include <CLI11.hpp>

#include "casimir/error.hpp"
#include "commands.hpp"
#include "run_config.hpp"
#include "verify.hpp"

using namespace casimir;
using namespace casimir::cli;

int main(int argc, char** argv) {
  CLI::App app{"Casimir force-fluctuation predictions for force microscopy"};
  app.require_subcommand(1);

  PredictArgs predict;
  auto* predict_cmd = app.add_subcommand("predict", "Noise and damping shift from a spring shift");
  predict_cmd->require_subcommand(1);
  auto* normal_cmd = predict_cmd->add_subcommand("normal", "Tip vibrating along the surface normal");
  normal_cmd->add_option("--delta-k", predict.delta_k, "Spring constant shift [N/m], <= 0")
      ->required();
  normal_cmd->add_option("--temperature", predict.temperature, "Temperature [K]")
      ->capture_default_str();
  auto* transverse_cmd =
      predict_cmd->add_subcommand("transverse", "End-on tip vibrating parallel to the surface");
  transverse_cmd->add_option("--delta-k", predict.delta_k, "Spring constant shift [N/m], >= 0")
      ->required();
  transverse_cmd->add_option("--mode-length", predict.mode_length, "Modal length l [m]")
      ->required();
  transverse_cmd->add_option("--gap", predict.gap, "Tip-sample gap h [m]")->required();
  transverse_cmd->add_option("--temperature", predict.temperature, "Temperature [K]")
      ->capture_default_str();

  GeometryArgs geometry;
  geometry.seed = kDefaultSeed;
  std::string spectrum;
  auto* geometry_cmd = app.add_subcommand("geometry", "Sphere over half-space totals");
  geometry_cmd->add_option("--radius", geometry.radius, "Tip radius r [m]")->required();
  geometry_cmd->add_option("--gap", geometry.gap, "Gap h [m]")->required();
  geometry_cmd->add_option("--rho-a", geometry.rho_a, "Tip atom density [1/m^3]")->required();
  geometry_cmd->add_option("--rho-b", geometry.rho_b, "Sample atom density [1/m^3]")->required();
  geometry_cmd->add_option("--kappa", geometry.kappa, "Dipole coupling strength")->required();
  auto* debye_opt = geometry_cmd->add_option("--debye-frequency", geometry.debye_frequency,
                                             "Debye frequency [rad/s]");
  geometry_cmd->add_option("--spectrum", spectrum, "Tabulated omega,p CSV")->excludes(debye_opt);
  geometry_cmd->add_flag("--oracle", geometry.oracle, "Cross-check against Monte Carlo");
  geometry_cmd->add_option("--samples", geometry.samples, "Monte Carlo samples")
      ->capture_default_str();
  auto* geometry_seed = geometry_cmd->add_option("--seed", geometry.seed, "Monte Carlo seed");

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Brownian cantilever time series");
  simulate_cmd->add_option("--config", simulate.config, "Run config JSON")->required();
  simulate_cmd->add_option("--out", simulate.out, "Output t,x CSV")->required();

  FitArgs fit;
  std::string fit_in;
  std::string fit_acf;
  std::string fit_config;
  auto* fit_cmd = app.add_subcommand("fit", "Fit the thermal autocorrelation of a series");
  auto* in_opt = fit_cmd->add_option("--in", fit_in, "Input t,x CSV");
  fit_cmd->add_option("--acf", fit_acf, "Precomputed tau,acf CSV")->excludes(in_opt);
  fit_cmd->add_option("--max-lag", fit.max_lag, "Largest lag [s]");
  fit_cmd->add_option("--mass", fit.mass, "Cantilever mass [kg]");
  fit_cmd->add_option("--temperature", fit.temperature, "Temperature [K]");
  fit_cmd->add_option("--config", fit_config, "Run config JSON supplying the cantilever");

  VerifyArgs verify;
  verify.seed = kDefaultSeed;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle comparison suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  verify_cmd->add_flag("--fast", verify.fast, "Reduced sample counts");
  auto* verify_seed = verify_cmd->add_option("--seed", verify.seed, "Seed for stochastic checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (geometry_seed->count() == 0) geometry.seed = default_seed();
    if (verify_seed->count() == 0) verify.seed = default_seed();
    if (!spectrum.empty()) geometry.spectrum_csv = spectrum;
    if (!fit_in.empty()) fit.series = fit_in;
    if (!fit_acf.empty()) fit.acf = fit_acf;
    if (!fit_config.empty()) fit.config = fit_config;

    if (normal_cmd->parsed()) return cmd_predict(predict, std::cout);
    if (transverse_cmd->parsed()) {
      predict.transverse = true;
      return cmd_predict(predict, std::cout);
    }
    if (geometry_cmd->parsed()) return cmd_geometry(geometry, std::cout);
    if (simulate_cmd->parsed()) return cmd_simulate(simulate, std::cout);
    if (fit_cmd->parsed()) return cmd_fit(fit, std::cout);
    if (verify_cmd->parsed()) return cmd_verify(verify, std::cout);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    // Numerical failures on accepted input count against verification.
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}
