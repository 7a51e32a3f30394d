#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"
#include "casimir/predict.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(CantileverParams, InvariantsAndDerivedSpring) {
  const auto p = CantileverParams::from_spring(1e-3, 2.0 * kPi * 1e4, 1e4, 4.0);
  EXPECT_NEAR(p.spring() / 1e-3, 1.0, 1e-12);
  EXPECT_THROW(CantileverParams(0.0, 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(CantileverParams(1.0, 1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(CantileverParams(1.0, 1.0, 1.0, -1.0), DomainError);
}

TEST(ThermalForcePsd, Examples) {
  const CantileverParams p(1e-12, 2.0 * kPi * 1e4, 1e4, 4.0);
  EXPECT_NEAR(thermal_force_psd(p) / 6.9398988e-34, 1.0, 1e-7);
  EXPECT_EQ(thermal_force_psd(CantileverParams(1e-12, 2.0 * kPi * 1e4, 1e4, 0.0)), 0.0);
  const CantileverParams doubled(1e-12, 2.0 * kPi * 1e4, 2e4, 4.0);
  EXPECT_NEAR(thermal_force_psd(doubled) * 2.0, thermal_force_psd(p), 1e-15 * thermal_force_psd(p));
  const auto k_based = CantileverParams::from_spring(1e-3, 2.0 * kPi * 1e4, 1e4, 4.0);
  EXPECT_NEAR(thermal_force_psd(k_based) / 1.7578969e-34, 1.0, 1e-7);
}

TEST(EquipartitionX2, Examples) {
  const auto p = CantileverParams::from_spring(1e-3, 2.0 * kPi * 1e4, 1e4, 4.0);
  EXPECT_NEAR(equipartition_x2(p) / 5.522596e-20, 1.0, 1e-6);
  EXPECT_NEAR(std::sqrt(equipartition_x2(p)), 2.350e-10, 1e-13);
  const auto hot = CantileverParams::from_spring(1e-3, 2.0 * kPi * 1e4, 1e4, 8.0);
  EXPECT_NEAR(equipartition_x2(hot) / equipartition_x2(p), 2.0, 1e-14);
  EXPECT_EQ(equipartition_x2(CantileverParams::from_spring(1e-3, 1.0, 1.0, 0.0)), 0.0);
}

TEST(CasimirNormal, NoiseAndDamping) {
  const double s = casimir_noise_normal(-2.6e-3);
  EXPECT_NEAR(s / 5.01722446e-37, 1.0, 1e-8);
  EXPECT_NEAR(std::sqrt(s) / 7.0832369e-19, 1.0, 1e-7);
  EXPECT_EQ(casimir_noise_normal(0.0), 0.0);
  EXPECT_NEAR(casimir_noise_normal(-1.0) / (1.8298438139466457 * kHbar), 1.0, 1e-14);
  EXPECT_THROW(casimir_noise_normal(1e-3), DomainError);

  const double d = casimir_damping_normal(-2.6e-3, 4.0);
  EXPECT_NEAR(d / 4.5424511e-15, 1.0, 1e-7);
  EXPECT_NEAR(casimir_damping_normal(-2.6e-3, 2.0) / d, 2.0, 1e-14);
  EXPECT_EQ(casimir_damping_normal(0.0, 4.0), 0.0);
  EXPECT_NEAR(d * 2.0 * kBoltzmann * 4.0 / s, 1.0, 1e-14);
  EXPECT_THROW(casimir_damping_normal(-1e-3, 0.0), DomainError);
  EXPECT_THROW(casimir_damping_normal(1e-3, 4.0), DomainError);
}

TEST(CasimirNormal, CoefficientOverride) {
  EXPECT_NEAR(casimir_noise_normal(-1.0, 2.0) / kHbar, 2.0, 1e-15);
}

TEST(CasimirTransverse, NoiseAndDamping) {
  const double s = casimir_noise_transverse(1e-3, 1e-4, 1e-9);
  EXPECT_NEAR(s / 1.6080848e-33, 1.0, 1e-7);
  EXPECT_EQ(casimir_noise_transverse(0.0, 1e-4, 1e-9), 0.0);
  EXPECT_NEAR(casimir_noise_transverse(1e-3, 1e-4, 2e-9) * 2.0, s, 1e-15 * s);
  EXPECT_THROW(casimir_noise_transverse(-1e-3, 1e-4, 1e-9), DomainError);
  EXPECT_THROW(casimir_noise_transverse(1e-3, 0.0, 1e-9), DomainError);

  const double d = casimir_damping_transverse(1e-3, 1e-4, 1e-9, 4.0);
  EXPECT_NEAR(d / 1.4559138e-11, 1.0, 1e-7);
  EXPECT_NEAR(d * 2.0 * kBoltzmann * 4.0 / s, 1.0, 1e-14);
  EXPECT_NEAR(casimir_damping_transverse(1e-3, 1e-4, 1e-9, 300.0) / d, 4.0 / 300.0, 1e-15);
  EXPECT_THROW(casimir_damping_transverse(1e-3, 1e-4, 1e-9, 0.0), DomainError);
}

TEST(Coefficients, SymbolicIdentities) {
  using namespace coefficients;
  EXPECT_EQ(kNormalNoise, 2.0 * kNormalDamping);
  EXPECT_EQ(kTransverseNoise, 2.0 * kTransverseDamping);
  EXPECT_NEAR(kTotalNoise / kTotalSpring / kNormalNoise, 1.0, 1e-15);
}

MaterialSpec material() {
  return MaterialSpec(5e28, 6e28, DipoleCoupling{3e-33}, SpectralDistribution::debye(5e13));
}

TEST(PredictFromGeometry, NormalSatisfiesNoiseRelation) {
  for (double h : {1e-9, 1e-8, 1e-7, 1e-6}) {
    const TipSampleGeometry g(1e-6, h, Vector3(0.0, 0.0, -1.0));
    const auto r = predict_from_geometry(g, material(), NormalVibration{}, 4.0);
    EXPECT_LT(r.delta_k, 0.0);
    EXPECT_NEAR(r.delta_sf / (-r.delta_k) / kHbar / 1.8298438139466457, 1.0, 1e-12);
    EXPECT_NEAR(r.delta_sf / casimir_noise_normal(r.delta_k), 1.0, 4e-16);
    EXPECT_EQ(r.delta_damping * 2.0 * kBoltzmann * 4.0, r.delta_sf);
    EXPECT_EQ(r.sqrt_delta_sf, std::sqrt(r.delta_sf));
    EXPECT_TRUE(r.warnings.empty());
  }
}

TEST(PredictFromGeometry, TransverseApproachesSmallGapLaw) {
  const double r = 1e-6;
  const TransverseVibration vib{ModeShape::euler_bernoulli(1, 1e-4)};
  const auto near = predict_from_geometry(TipSampleGeometry(r, 1e-4 * r), material(), vib, 4.0);
  EXPECT_GT(near.delta_k, 0.0);
  EXPECT_NEAR(near.delta_sf / near.asymptotic_delta_sf, 1.0, 2e-4);
  EXPECT_TRUE(near.warnings.empty());
  const auto far = predict_from_geometry(TipSampleGeometry(r, r), material(), vib, 4.0);
  // Exact tensor ratio against the small-gap law: 2h (r + h) / (h (2r + h)) at h = r.
  EXPECT_NEAR(far.delta_sf / far.asymptotic_delta_sf, 4.0 / 3.0, 1e-12);
  EXPECT_FALSE(far.warnings.empty());
  EXPECT_THROW(predict_from_geometry(TipSampleGeometry(r, r), material(), vib, 0.0), DomainError);
}

}  // namespace
}  // namespace casimir
