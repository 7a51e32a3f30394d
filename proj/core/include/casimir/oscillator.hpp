#pragma once

#include "casimir/specfun.hpp"

namespace casimir {

/// One damped atomic oscillator coupled to an independent-oscillator heat
/// bath: bare frequency omega and damping rate gamma (both rad/s).
///
/// Correlation convention used throughout the library:
///   C_AB(tau) = <A(t) B(t+tau) + B(t+tau) A(t)> / 2
///   S_A(omega) = integral d tau e^{i omega tau} C_AA(tau)
/// so every spectrum is real and even in omega, and C(0) = (1/2pi) int S.
/// Coordinates are scaled so that <q^2> carries units of hbar.
struct OscillatorSpec {
  double omega = 1.0;
  double gamma = 0.0;

  OscillatorSpec() = default;
  /// Requires omega > 0 and 0 <= gamma < 2 omega.
  OscillatorSpec(double omega, double gamma);

  /// sqrt(omega^2 - gamma^2/4).
  double damped_frequency() const;
};

/// Zero-temperature position autocorrelation, exact in the damping:
/// (hbar/2)(omega/wbar)[e^{-gamma|tau|/2} cos(wbar tau) + (2/pi) Im g((wbar + i gamma/2)|tau|)].
double autocorr_exact(const OscillatorSpec& spec, double tau);

/// Weak-damping form (hbar/2) e^{-gamma|tau|/2} cos(wbar tau).
double autocorr_weak(const OscillatorSpec& spec, double tau);

/// Quadrature oracle: (hbar/pi) int_0^inf d omega gamma omega_a omega cos(omega tau)
/// / ((omega_a^2 - omega^2)^2 + gamma^2 omega^2).
double autocorr_quadrature(const OscillatorSpec& spec, double tau,
                           const QuadratureSettings& settings = {});

/// S_q(omega) = hbar gamma omega_a |omega| / ((omega_a^2 - omega^2)^2 + gamma^2 omega^2).
/// Requires gamma > 0.
double position_spectrum(const OscillatorSpec& spec, double omega);

/// Fraction of the zero-lag power that falls within half_width of the
/// carriers +/- wbar. half_width may be +infinity. Requires gamma > 0.
double band_power_fraction(const OscillatorSpec& spec, double half_width,
                           const QuadratureSettings& settings = {});

/// Langevin force spectrum gamma omega_a hbar omega coth(hbar omega / 2 k_B T).
double langevin_force_spectrum(const OscillatorSpec& spec, double omega,
                               double temperature);

}  // namespace casimir
