#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace casimir::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct PredictArgs {
  bool transverse = false;
  double delta_k = 0.0;
  double temperature = 4.0;
  std::optional<double> mode_length;
  std::optional<double> gap;
};

struct GeometryArgs {
  double radius = 0.0;
  double gap = 0.0;
  double rho_a = 0.0;
  double rho_b = 0.0;
  double kappa = 0.0;
  std::optional<double> debye_frequency;
  std::optional<std::filesystem::path> spectrum_csv;
  bool oracle = false;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

struct SimulateArgs {
  std::filesystem::path config;
  std::filesystem::path out;
};

struct FitArgs {
  std::optional<std::filesystem::path> series;
  std::optional<std::filesystem::path> acf;
  std::optional<double> max_lag;
  std::optional<double> mass;
  std::optional<double> temperature;
  std::optional<std::filesystem::path> config;
};

struct VerifyArgs {
  std::string suite = "all";
  bool fast = false;
  std::uint64_t seed = 0;
};

// Each command writes one JSON document to out and returns the exit code.
// Invalid input surfaces as DomainError or ConfigError for the caller to map.
int cmd_predict(const PredictArgs& args, std::ostream& out);
int cmd_geometry(const GeometryArgs& args, std::ostream& out);
int cmd_simulate(const SimulateArgs& args, std::ostream& out);
int cmd_fit(const FitArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);

}  // namespace casimir::cli
