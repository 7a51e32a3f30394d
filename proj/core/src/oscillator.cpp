#include "casimir/oscillator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "casimir/error.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;

// Dimensionless (hbar = 1) spectral integrand of the quadrature oracle.
double lorentz_kernel(const OscillatorSpec& spec, double w) {
  const double wa2 = spec.omega * spec.omega;
  const double d = wa2 - w * w;
  return spec.gamma * spec.omega * w / (d * d + spec.gamma * spec.gamma * w * w);
}

std::vector<double> peak_breakpoints(const OscillatorSpec& spec) {
  const double center = spec.damped_frequency();
  std::vector<double> points;
  for (double k : {-100.0, -10.0, -1.0, 0.0, 1.0, 10.0, 100.0}) {
    const double p = center + k * spec.gamma;
    if (p > 0.0 && (points.empty() || p > points.back())) points.push_back(p);
  }
  const double far = 2.0 * spec.omega + 100.0 * spec.gamma;
  if (far > points.back()) points.push_back(far);
  return points;
}

}  // namespace

OscillatorSpec::OscillatorSpec(double omega_in, double gamma_in)
    : omega(omega_in), gamma(gamma_in) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("OscillatorSpec: omega must be > 0, got " + std::to_string(omega));
  }
  if (!(gamma >= 0.0) || !(gamma < 2.0 * omega)) {
    throw DomainError("OscillatorSpec: gamma must satisfy 0 <= gamma < 2 omega");
  }
}

double OscillatorSpec::damped_frequency() const {
  return std::sqrt(omega * omega - 0.25 * gamma * gamma);
}

double autocorr_exact(const OscillatorSpec& spec, double tau) {
  const double t = std::abs(tau);
  if (spec.gamma == 0.0) return 0.5 * kHbar * std::cos(spec.omega * t);
  const double wbar = spec.damped_frequency();
  const double ratio = spec.omega / wbar;
  if (t == 0.0) {
    return 0.5 * kHbar * ratio *
           (1.0 - 2.0 / kPi * std::atan(spec.gamma / (2.0 * wbar)));
  }
  const ComplexValue z(wbar * t, 0.5 * spec.gamma * t);
  const double squeeze = std::imag(expint_g(z));
  return 0.5 * kHbar * ratio *
         (std::exp(-0.5 * spec.gamma * t) * std::cos(wbar * t) +
          2.0 / kPi * squeeze);
}

double autocorr_weak(const OscillatorSpec& spec, double tau) {
  const double t = std::abs(tau);
  return 0.5 * kHbar * std::exp(-0.5 * spec.gamma * t) *
         std::cos(spec.damped_frequency() * t);
}

double autocorr_quadrature(const OscillatorSpec& spec, double tau,
                           const QuadratureSettings& settings) {
  const double t = std::abs(tau);
  if (spec.gamma == 0.0) return 0.5 * kHbar * std::cos(spec.omega * t);
  QuadratureSettings local = settings;
  local.abs_tol = std::max(settings.abs_tol, 1e-15);
  const auto breaks = peak_breakpoints(spec);
  auto h = [&spec](double w) { return lorentz_kernel(spec, w); };
  const double integral =
      t == 0.0 ? integrate_adaptive(h, 0.0, std::numeric_limits<double>::infinity(),
                                    local, breaks)
               : integrate_fourier_cos(h, 0.0, t, local, breaks);
  return kHbar / kPi * integral;
}

double position_spectrum(const OscillatorSpec& spec, double omega) {
  if (!(spec.gamma > 0.0)) throw DomainError("position_spectrum: requires gamma > 0");
  return kHbar * lorentz_kernel(spec, std::abs(omega));
}

double band_power_fraction(const OscillatorSpec& spec, double half_width,
                           const QuadratureSettings& settings) {
  if (!(spec.gamma > 0.0)) throw DomainError("band_power_fraction: requires gamma > 0");
  if (!(half_width >= 0.0)) throw DomainError("band_power_fraction: half_width must be >= 0");
  const double wbar = spec.damped_frequency();
  const double lo = std::max(0.0, wbar - half_width);
  const double hi = wbar + half_width;
  std::vector<double> breaks;
  for (double p : peak_breakpoints(spec)) {
    if (p > lo && p < hi) breaks.push_back(p);
  }
  auto h = [&spec](double w) { return lorentz_kernel(spec, w); };
  // Positive and negative frequency bands contribute equally.
  const double band = 2.0 * integrate_adaptive(h, lo, hi, settings, breaks) / (2.0 * kPi);
  const double total = autocorr_exact(spec, 0.0) / kHbar;
  return band / total;
}

double langevin_force_spectrum(const OscillatorSpec& spec, double omega,
                               double temperature) {
  return spec.gamma * spec.omega * thermal_kernel(omega, temperature);
}

}  // namespace casimir
