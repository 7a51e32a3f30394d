#pragma once

#include <numbers>

namespace casimir {

/// CODATA 2018 exact values.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double k_B = 1.380649e-23;      // J / K
};

inline constexpr double kHbar = PhysicalConstants::hbar;
inline constexpr double kBoltzmann = PhysicalConstants::k_B;

namespace coefficients {

inline constexpr double kPi = std::numbers::pi;
/// ln(4/e) = 2 ln 2 - 1.
inline constexpr double kLn4OverE = 2.0 * std::numbers::ln2 - 1.0;

/// Debye-averaged <q_a q_b> per unit coupling, in units of hbar/omega_D.
inline constexpr double kDebyeCrossExpectation = 9.0 * kLn4OverE / 10.0;
/// Debye-averaged dc pair-noise density, in units of hbar^2/omega_D.
inline constexpr double kDebyePairNoiseDc = 9.0 * kPi / 20.0;

/// Sphere over half-space totals, in units of hbar rho_a rho_b kappa^2/omega_D
/// (noise: hbar^2 rho_a rho_b kappa^2/omega_D).
inline constexpr double kTotalForce = 3.0 * kLn4OverE * kPi * kPi / 10.0;
inline constexpr double kTotalSpring = 6.0 * kLn4OverE * kPi * kPi / 5.0;
inline constexpr double kTotalNoise = 27.0 * kPi * kPi * kPi / 100.0;
/// Transverse/normal eigenvalue ratio of the total noise tensor.
inline constexpr double kTransverseNoiseFraction = 1.0 / 24.0;

/// delta S_f / (hbar (-delta k)) for normal vibration.
inline constexpr double kNormalNoise = 9.0 * kPi / (40.0 * kLn4OverE);
/// delta(m omega_0/Q) k_B T / (hbar (-delta k)) for normal vibration.
inline constexpr double kNormalDamping = 9.0 * kPi / (80.0 * kLn4OverE);
/// delta S_f / ((l/h) hbar delta k) for transverse vibration.
inline constexpr double kTransverseNoise = 3.0 * kPi / (160.0 * kLn4OverE);
/// delta(m omega_0/Q) k_B T / ((l/h) hbar delta k) for transverse vibration.
inline constexpr double kTransverseDamping = 3.0 * kPi / (320.0 * kLn4OverE);

}  // namespace coefficients
}  // namespace casimir
