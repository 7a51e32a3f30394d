#include "casimir/simulate.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include <Eigen/Cholesky>
#include <unsupported/Eigen/MatrixFunctions>

#include "casimir/csv.hpp"
#include "casimir/error.hpp"

namespace casimir {
namespace {

double total_damping(const SimulationConfig& config) {
  return config.params.damping() + config.extra_damping;
}

double total_force_psd(const SimulationConfig& config) {
  return thermal_force_psd(config.params) + config.extra_force_psd;
}

// e^{A dt} for A = [[0, 1], [-w0^2, -g]].
Eigen::Matrix2d transition(double w0, double g, double dt) {
  const double disc = w0 * w0 - 0.25 * g * g;
  if (disc > 0.0) {
    const double wd = std::sqrt(disc);
    const double c = std::cos(wd * dt);
    const double s = std::sin(wd * dt);
    const double decay = std::exp(-0.5 * g * dt);
    Eigen::Matrix2d phi;
    phi << c + 0.5 * g * s / wd, s / wd, -w0 * w0 * s / wd, c - 0.5 * g * s / wd;
    return decay * phi;
  }
  Eigen::Matrix2d a;
  a << 0.0, 1.0, -w0 * w0, -g;
  return (a * dt).exp();
}

}  // namespace

void SimulationConfig::validate() const {
  const double period = 2.0 * std::numbers::pi / params.omega0;
  if (!(dt > 0.0) || !(dt < 0.05 * period)) {
    throw DomainError("simulation: dt must satisfy 0 < dt < 0.05 * (2 pi / omega0)");
  }
  if (!(duration > dt) || !std::isfinite(duration)) {
    throw DomainError("simulation: duration must exceed dt");
  }
  if (!(extra_force_psd >= 0.0) || !(extra_damping >= 0.0)) {
    throw DomainError("simulation: extra_force_psd and extra_damping must be >= 0");
  }
  if (!(params.damping() + extra_damping > 0.0)) {
    throw DomainError("simulation: total damping must be > 0");
  }
}

double simulated_variance(const SimulationConfig& config) {
  return total_force_psd(config) / (2.0 * total_damping(config) * config.params.spring());
}

TimeSeries simulate_brownian(const SimulationConfig& config) {
  config.validate();
  const double mass = config.params.mass;
  const double w0 = config.params.omega0;
  const double big_gamma = total_damping(config);
  const double g = big_gamma / mass;
  const double dt = config.dt;

  const Eigen::Matrix2d phi = transition(w0, g, dt);
  // Stationary covariance of (x, v) and the exact one-step noise covariance.
  const double s = total_force_psd(config);
  Eigen::Matrix2d p_inf = Eigen::Matrix2d::Zero();
  p_inf(0, 0) = s / (2.0 * big_gamma * config.params.spring());
  p_inf(1, 1) = s / (2.0 * big_gamma * mass);
  Eigen::Matrix2d noise_cov = p_inf - phi * p_inf * phi.transpose();
  noise_cov = 0.5 * (noise_cov + noise_cov.transpose());

  Eigen::Matrix2d chol = Eigen::Matrix2d::Zero();
  if (s > 0.0) {
    const Eigen::LLT<Eigen::Matrix2d> llt(noise_cov);
    if (llt.info() != Eigen::Success) {
      throw AccuracyError("simulate_brownian: step noise covariance is not positive definite");
    }
    chol = llt.matrixL();
  }

  const auto n = static_cast<std::size_t>(std::llround(config.duration / dt));
  const auto discard = static_cast<std::size_t>(std::ceil(10.0 * 2.0 * mass / big_gamma / dt));

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double x = 0.0;
  double v = 0.0;
  auto step = [&]() {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    const double nx = phi(0, 0) * x + phi(0, 1) * v + chol(0, 0) * z1;
    const double nv = phi(1, 0) * x + phi(1, 1) * v + chol(1, 0) * z1 + chol(1, 1) * z2;
    x = nx;
    v = nv;
  };
  for (std::size_t i = 0; i < discard; ++i) step();

  TimeSeries ts;
  ts.dt = dt;
  ts.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    step();
    ts.samples[i] = x;
  }
  return ts;
}

void write_time_series_csv(std::ostream& out, const TimeSeries& ts) {
  out << "t,x\n";
  std::string row;
  for (std::size_t i = 0; i < ts.samples.size(); ++i) {
    row = format_double(ts.dt * static_cast<double>(i));
    row += ',';
    row += format_double(ts.samples[i]);
    row += '\n';
    out << row;
  }
}

void write_time_series_csv(const std::filesystem::path& path, const TimeSeries& ts) {
  std::ofstream out(path);
  if (!out) throw ConfigError(path.string() + ": cannot open for writing");
  write_time_series_csv(out, ts);
  if (!out) throw ConfigError(path.string() + ": write failed");
}

TimeSeries read_time_series_csv(const std::filesystem::path& path) {
  TwoColumnTable table = read_two_column_csv(path, "t", "x");
  const auto& t = table.first;
  if (t.size() < 2) throw ConfigError(path.string() + ": need at least two samples");
  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) throw ConfigError(path.string() + ": time column must increase");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double expected = t.front() + dt * static_cast<double>(i);
    if (std::abs(t[i] - expected) > 1e-6 * dt) {
      throw ConfigError(path.string() + ":" + std::to_string(i + 2) +
                        ": samples are not uniformly spaced");
    }
  }
  for (std::size_t i = 0; i < table.second.size(); ++i) {
    if (!std::isfinite(table.second[i])) {
      throw ConfigError(path.string() + ":" + std::to_string(i + 2) + ": non-finite sample");
    }
  }
  return TimeSeries{dt, std::move(table.second)};
}

}  // namespace casimir
