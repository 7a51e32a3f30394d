#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "casimir/predict.hpp"

namespace casimir {

struct SimulationConfig {
  double dt = 0.0;
  double duration = 0.0;
  std::uint64_t seed = 20261016;
  CantileverParams params;
  /// Extra white force noise added to the thermal drive, N^2 s.
  double extra_force_psd = 0.0;
  /// Extra velocity damping, kg/s.
  double extra_damping = 0.0;

  /// Ring-down time 2Q/omega0 of the thermal cantilever.
  double ring_down_time() const { return 2.0 * params.q / params.omega0; }
  /// Throws DomainError unless dt < 0.05 of a period, duration > 0, the
  /// extras are non-negative and the total damping is positive.
  void validate() const;
};

struct TimeSeries {
  double dt = 0.0;
  std::vector<double> samples;

  double duration() const { return dt * static_cast<double>(samples.size()); }
};

/// Stationary Brownian motion of the damped cantilever driven by white force
/// noise of density 2 k_B T m omega0/Q + extra_force_psd, with total damping
/// m omega0/Q + extra_damping. Uses the exact one-step transition of the
/// linear SDE; starts at rest and discards 10 ring-down times of transient.
/// Deterministic for a fixed seed.
TimeSeries simulate_brownian(const SimulationConfig& config);

/// Stationary variance of the simulated coordinate for a configuration.
double simulated_variance(const SimulationConfig& config);

/// Autocorrelation estimate C(j dt), j = 0 .. values.size() - 1.
struct Autocorrelation {
  double dt = 0.0;
  std::vector<double> values;

  double lag(std::size_t j) const { return dt * static_cast<double>(j); }
};

/// Biased (1/N) estimator of the mean-subtracted autocorrelation, computed
/// with block FFTs. Requires max_lag <= duration / 10.
Autocorrelation estimate_autocorrelation(const TimeSeries& ts, double max_lag);

/// Two-sided power spectral density of x by Welch averaging with a Hann
/// window; normalized so the integral over omega/(2 pi) is the variance.
struct PowerSpectrum {
  std::vector<double> omega;
  std::vector<double> density;
};
PowerSpectrum estimate_power_spectrum(const TimeSeries& ts, std::size_t segment_length);

struct FitResult {
  double x2_mean = 0.0;
  double omega0_fit = 0.0;
  double q_fit = 0.0;
  double sf_extracted = 0.0;
  double fit_residual = 0.0;
};

/// Least-squares fit of <x^2> e^{-omega0 tau/(2Q)} cos(omega0 tau) over lags
/// up to five ring-down times, started from zero-crossing and log-envelope
/// estimates. The force density is extracted with the given mass. Throws
/// DomainError when the ACF covers fewer than 20 periods and AccuracyError
/// on non-convergence or a non-positive fitted Q.
FitResult fit_autocorrelation(const Autocorrelation& acf, double mass);

/// (2 k^2 / (Q omega0)) <x^2> with k = m omega0^2.
double extract_force_psd(const FitResult& fit, double mass);

/// CSV `t,x` I/O with full double precision.
void write_time_series_csv(std::ostream& out, const TimeSeries& ts);
void write_time_series_csv(const std::filesystem::path& path, const TimeSeries& ts);
/// Throws ConfigError for a missing header, malformed rows, fewer than two
/// samples or non-uniform spacing.
TimeSeries read_time_series_csv(const std::filesystem::path& path);

}  // namespace casimir
