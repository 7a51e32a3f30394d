#pragma once

#include "casimir/oscillator.hpp"

namespace casimir {

/// Two atomic oscillators with bilinear coupling -beta q_a q_b (beta in
/// rad/s, Hamiltonian convention where q^2 carries hbar).
struct PairSpec {
  OscillatorSpec a;
  OscillatorSpec b;
  double beta = 0.0;

  PairSpec() = default;
  /// Requires |beta| < min(a.omega, b.omega).
  PairSpec(OscillatorSpec a, OscillatorSpec b, double beta);
};

/// Relative frequency splitting |w_a - w_b| / (w_a + w_b) below which the
/// damping correction switches to its series form.
inline constexpr double kDegeneracySwitch = 1e-4;

/// Zero-temperature <q_a q_b> to first order in beta and the damping rates:
/// hbar beta / (2 (w_a + w_b)) plus the gamma-linear correction.
double cross_expectation(const PairSpec& pair);

/// Ground-state <q_a q_b> of the undamped Hamiltonian by normal-mode
/// diagonalization. Requires gamma_a = gamma_b = 0; throws DomainError when
/// the coupled quadratic form is not positive definite.
double cross_expectation_exact_undamped(const PairSpec& pair);

/// C_aa(tau) C_bb(tau) with the weak-damping autocorrelations.
double pair_noise_autocorr(const PairSpec& pair, double tau);

/// Fourier transform of pair_noise_autocorr: four Lorentzians of half-width
/// (gamma_a + gamma_b)/2 at +/-(wbar_a - wbar_b) and +/-(wbar_a + wbar_b).
/// Requires gamma_a + gamma_b > 0.
double pair_noise_spectrum(const PairSpec& pair, double omega);

}  // namespace casimir
