#pragma once

#include <string>
#include <variant>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

/// Cantilever fundamental mode: effective mass, resonance, quality factor
/// and bath temperature.
struct CantileverParams {
  double mass = 1.0;
  double omega0 = 1.0;
  double q = 1.0;
  double temperature = 0.0;

  CantileverParams() = default;
  /// Requires mass, omega0, q > 0 and temperature >= 0.
  CantileverParams(double mass, double omega0, double q, double temperature);
  /// Mass inferred from k = m omega0^2.
  static CantileverParams from_spring(double spring, double omega0, double q,
                                      double temperature);

  double spring() const { return mass * omega0 * omega0; }
  /// Damping coefficient m omega0 / Q.
  double damping() const { return mass * omega0 / q; }
};

/// (m omega0 / Q) 2 k_B T.
double thermal_force_psd(const CantileverParams& params);
/// k_B T / k.
double equipartition_x2(const CantileverParams& params);

/// Normal approach: delta_k <= 0. The coefficient defaults to the Debye
/// value and may be overridden for other materials or shapes.
double casimir_noise_normal(double delta_k,
                            double coefficient = coefficients::kNormalNoise);
/// Requires temperature > 0; equal to casimir_noise_normal / (2 k_B T).
double casimir_damping_normal(double delta_k, double temperature,
                              double coefficient = coefficients::kNormalDamping);

/// End-on (transverse) vibration: delta_k >= 0, mode_l and gap > 0.
double casimir_noise_transverse(double delta_k, double mode_l, double gap,
                                double coefficient = coefficients::kTransverseNoise);
double casimir_damping_transverse(double delta_k, double mode_l, double gap,
                                  double temperature,
                                  double coefficient = coefficients::kTransverseDamping);

struct PredictionResult {
  double delta_k = 0.0;
  double delta_sf = 0.0;
  double delta_damping = 0.0;
  double sqrt_delta_sf = 0.0;
  /// Transverse only: the small-gap closed-form noise for the same delta_k.
  double asymptotic_delta_sf = 0.0;
  std::vector<std::string> warnings;
};

/// Vibration along the surface normal.
struct NormalVibration {};
/// Vibration parallel to the surface with the given cantilever mode.
struct TransverseVibration {
  ModeShape mode = ModeShape::linear(1.0);
};
using Vibration = std::variant<NormalVibration, TransverseVibration>;

/// Chains the geometry totals into the observables. Normal: delta_k is the
/// nn spring component and delta_Sf the nn noise. Transverse: delta_k =
/// |f| / l and delta_Sf the tangential noise; a warning is attached when
/// h/r > 0.1. Requires temperature > 0.
PredictionResult predict_from_geometry(const TipSampleGeometry& geom,
                                       const MaterialSpec& material,
                                       const Vibration& vibration, double temperature);

}  // namespace casimir
