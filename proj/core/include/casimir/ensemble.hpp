#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir {

/// Normalized density p(omega) of atomic oscillator frequencies: either the
/// Debye law 3 omega^2 / omega_D^3 on [0, omega_D] or a piecewise-linear
/// table.
class SpectralDistribution {
 public:
  /// Throws DomainError unless omega_D > 0.
  static SpectralDistribution debye(double omega_d);

  /// Piecewise-linear density through (omega_i, p_i), normalized by the
  /// trapezoid rule. The grid must be strictly increasing, start at
  /// omega >= 0 and hold at least two points; negative p is rejected.
  static SpectralDistribution tabulated(std::vector<double> omega,
                                        std::vector<double> p);

  /// Loads a table from CSV with header `omega,p`.
  static SpectralDistribution from_csv(const std::filesystem::path& path);

  bool is_debye() const { return debye_; }
  /// Throws DomainError for tabulated distributions.
  double debye_frequency() const;

  double support_min() const;
  double support_max() const;

  /// p(omega); zero outside the support.
  double pdf(double omega) const;

  /// Integral of p^2. Throws DivergenceError when it is not finite.
  double integral_of_square() const;

  /// Laplace transform: integral of p(omega) e^{-s omega}, s >= 0.
  double laplace(double s) const;

  /// Support breakpoints: the grid for tables, {0, omega_D} for Debye.
  std::span<const double> knots() const { return omega_; }
  std::span<const double> values() const { return p_; }

 private:
  SpectralDistribution() = default;

  bool debye_ = false;
  std::vector<double> omega_;
  std::vector<double> p_;
};

/// Frequency-averaged <q_a q_b> at leading order in beta and the damping:
/// (9 ln(4/e)/10) hbar beta / omega_D for Debye; for tables the average of
/// hbar beta / (2 (w_a + w_b)), done through the Laplace identity
/// 1/(a + b) = integral of e^{-s(a+b)} ds.
double averaged_cross_expectation(const SpectralDistribution& dist, double beta,
                                  const QuadratureSettings& settings = {});

/// Nested adaptive quadrature of the same average. Oracle.
double averaged_cross_expectation_quadrature(const SpectralDistribution& dist,
                                             double beta,
                                             const QuadratureSettings& settings = {});

/// Weak-damping, low-frequency limit of the averaged pair-noise spectrum:
/// (pi hbar^2 / 4) times the integral of p^2.
double averaged_pair_noise_dc(const SpectralDistribution& dist);

/// Double average of pair_noise_spectrum(omega = 0) with both damping rates
/// equal to gamma. Frequencies below gamma are excluded from both averages.
/// Oracle for averaged_pair_noise_dc; converges to it as gamma -> 0 with a
/// leading correction of order gamma ln(1/gamma).
double averaged_pair_noise_dc_finite_gamma(const SpectralDistribution& dist,
                                           double gamma,
                                           const QuadratureSettings& settings = {});

/// Zero-damping limit from three finite-gamma runs, fitting
/// V0 + a gamma ln(gamma) + b gamma through the points. Gammas must be distinct.
double averaged_pair_noise_dc_extrapolated(const SpectralDistribution& dist,
                                           std::array<double, 3> gammas,
                                           const QuadratureSettings& settings = {});

}  // namespace casimir
