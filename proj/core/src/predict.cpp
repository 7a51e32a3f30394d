#include "casimir/predict.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "casimir/error.hpp"

namespace casimir {
namespace {

void require_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("Casimir damping requires temperature > 0 (the shift diverges as T -> 0)");
  }
}

void require_transverse(double delta_k, double mode_l, double gap) {
  if (!(delta_k >= 0.0)) {
    throw DomainError("transverse geometry requires delta_k >= 0");
  }
  if (!(mode_l > 0.0)) throw DomainError("transverse geometry requires mode_length > 0");
  if (!(gap > 0.0)) throw DomainError("transverse geometry requires gap > 0");
}

}  // namespace

CantileverParams::CantileverParams(double mass_in, double omega0_in, double q_in,
                                   double temperature_in)
    : mass(mass_in), omega0(omega0_in), q(q_in), temperature(temperature_in) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("cantilever: mass must be > 0");
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw DomainError("cantilever: omega0 must be > 0");
  }
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("cantilever: Q must be > 0");
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("cantilever: temperature must be >= 0");
  }
}

CantileverParams CantileverParams::from_spring(double spring, double omega0, double q,
                                               double temperature) {
  if (!(spring > 0.0) || !std::isfinite(spring)) {
    throw DomainError("cantilever: spring constant must be > 0");
  }
  if (!(omega0 > 0.0)) throw DomainError("cantilever: omega0 must be > 0");
  return CantileverParams(spring / (omega0 * omega0), omega0, q, temperature);
}

double thermal_force_psd(const CantileverParams& params) {
  return params.damping() * 2.0 * kBoltzmann * params.temperature;
}

double equipartition_x2(const CantileverParams& params) {
  return kBoltzmann * params.temperature / params.spring();
}

double casimir_noise_normal(double delta_k, double coefficient) {
  if (!(delta_k <= 0.0)) {
    throw DomainError("normal geometry requires delta_k <= 0 (the spring softens on approach)");
  }
  return coefficient * kHbar * (0.0 - delta_k);
}

double casimir_damping_normal(double delta_k, double temperature, double coefficient) {
  require_temperature(temperature);
  if (!(delta_k <= 0.0)) {
    throw DomainError("normal geometry requires delta_k <= 0 (the spring softens on approach)");
  }
  return coefficient * (kHbar / (kBoltzmann * temperature)) * (0.0 - delta_k);
}

double casimir_noise_transverse(double delta_k, double mode_l, double gap,
                                double coefficient) {
  require_transverse(delta_k, mode_l, gap);
  return coefficient * (mode_l / gap) * kHbar * delta_k;
}

double casimir_damping_transverse(double delta_k, double mode_l, double gap,
                                  double temperature, double coefficient) {
  require_temperature(temperature);
  require_transverse(delta_k, mode_l, gap);
  return coefficient * (kHbar / (kBoltzmann * temperature)) * (mode_l / gap) * delta_k;
}

PredictionResult predict_from_geometry(const TipSampleGeometry& geom,
                                       const MaterialSpec& material,
                                       const Vibration& vibration, double temperature) {
  require_temperature(temperature);
  PredictionResult out;
  const ForceNoiseTensor noise = total_noise(geom, material);
  if (std::holds_alternative<NormalVibration>(vibration)) {
    const Matrix3 spring = total_spring(geom, material);
    out.delta_k = geom.normal.dot(spring * geom.normal);
    out.delta_sf = geom.normal.dot(noise * geom.normal);
  } else {
    const auto& mode = std::get<TransverseVibration>(vibration).mode;
    const double l = mode_length(mode);
    out.delta_k = total_force(geom, material).norm() / l;
    // Any unit vector orthogonal to the normal.
    const Vector3 t = geom.normal.unitOrthogonal();
    out.delta_sf = t.dot(noise * t);
    out.asymptotic_delta_sf = casimir_noise_transverse(out.delta_k, l, geom.gap);
    if (geom.gap / geom.radius > 0.1) {
      out.warnings.push_back(
          "gap/radius > 0.1: the small-gap transverse coefficient does not apply");
    }
  }
  out.delta_damping = out.delta_sf / (2.0 * kBoltzmann * temperature);
  out.sqrt_delta_sf = std::sqrt(out.delta_sf);
  return out;
}

}  // namespace casimir
