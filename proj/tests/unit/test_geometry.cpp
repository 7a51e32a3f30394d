#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/geometry.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;

MaterialSpec unit_material() {
  return MaterialSpec(1.0, 1.0, DipoleCoupling{1.0}, SpectralDistribution::debye(1.0));
}

// Material with hbar rho_a rho_b kappa^2 / omega_D = 1.
MaterialSpec si_unit_material() {
  return MaterialSpec(1.0, 1.0, DipoleCoupling{1.0 / std::sqrt(kHbar)},
                      SpectralDistribution::debye(1.0));
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Pairwise, ForceIsAttractiveCentralInverseSeventh) {
  const auto m = unit_material();
  const Vector3 r(0.3, -0.2, 0.9);
  const Vector3 f = pairwise_force(m, r);
  EXPECT_NEAR(f.normalized().dot(r.normalized()), -1.0, 1e-15);
  EXPECT_NEAR(pairwise_force(m, 2.0 * r).norm() / f.norm(), std::pow(2.0, -7), 1e-15);
  const double x = m.cross_expectation_per_beta();
  EXPECT_NEAR(f.norm(), 3.0 * x / std::pow(r.norm(), 7), 1e-14 * f.norm());
  EXPECT_THROW(pairwise_force(m, Vector3::Zero()), DomainError);
}

TEST(Pairwise, ForceIsNegativeGradientOfEnergy) {
  const auto m = unit_material();
  const Vector3 r(0.7, 0.4, -0.5);
  const double h = 1e-5;
  for (int i = 0; i < 3; ++i) {
    Vector3 e = Vector3::Zero();
    e[i] = h;
    const double grad = (pairwise_energy(m, r + e) - pairwise_energy(m, r - e)) / (2.0 * h);
    EXPECT_NEAR(-grad / pairwise_force(m, r)[i], 1.0, 1e-6);
  }
}

TEST(Pairwise, SpringIsNegativeGradientOfForce) {
  const auto m = unit_material();
  const Vector3 r(0.7, 0.4, -0.5);
  const Matrix3 k = pairwise_spring(m, r);
  EXPECT_LT((k - k.transpose()).norm(), 1e-15 * k.norm());
  const double h = 1e-5;
  for (int i = 0; i < 3; ++i) {
    Vector3 e = Vector3::Zero();
    e[i] = h;
    const Vector3 d = -(pairwise_force(m, r + e) - pairwise_force(m, r - e)) / (2.0 * h);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(d[j], k(i, j), 1e-6 * k.norm());
  }
  EXPECT_NEAR(pairwise_spring(m, 2.0 * r).norm() / k.norm(), std::pow(2.0, -8), 1e-15);
}

TEST(Pairwise, SpringTraceIsLaplacianOfEnergy) {
  const auto m = unit_material();
  const Vector3 r(0.7, 0.4, -0.5);
  const double h = 1e-4;
  double lap = 0.0;
  for (int i = 0; i < 3; ++i) {
    Vector3 e = Vector3::Zero();
    e[i] = h;
    lap += (pairwise_energy(m, r + e) - 2.0 * pairwise_energy(m, r) + pairwise_energy(m, r - e)) /
           (h * h);
  }
  EXPECT_NEAR(pairwise_spring(m, r).trace() / lap, 1.0, 1e-6);
}

TEST(Pairwise, SpringIsRotationallyEquivariant) {
  const auto m = unit_material();
  const Vector3 r(0.7, 0.4, -0.5);
  const Matrix3 rot = Eigen::AngleAxisd(0.83, Vector3(1.0, -2.0, 0.5).normalized()).toRotationMatrix();
  const Matrix3 lhs = rot * pairwise_spring(m, r) * rot.transpose();
  const Matrix3 rhs = pairwise_spring(m, rot * r);
  EXPECT_LT((lhs - rhs).norm(), 1e-12 * rhs.norm());
}

TEST(Pairwise, NoiseIsRankOneAlongSeparation) {
  const auto m = unit_material();
  const Vector3 r(0.7, 0.4, -0.5);
  const Matrix3 s = pairwise_noise(m, r);
  const Eigen::SelfAdjointEigenSolver<Matrix3> eig(s);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-15 * s.norm());
  EXPECT_LT(std::abs(eig.eigenvalues()[1]), 1e-14 * s.norm());
  EXPECT_NEAR(std::abs(eig.eigenvectors().col(2).dot(r.normalized())), 1.0, 1e-14);
  EXPECT_NEAR(s.trace(), 9.0 * m.pair_noise_dc() / std::pow(r.norm(), 8), 1e-14 * s.trace());
}

TEST(GeometricFactors, Limits) {
  EXPECT_NEAR(force_geometric_factor(2.0, 2.0), 1.0 / 18.0, 1e-16);
  EXPECT_NEAR(spring_geometric_factor(2.0, 2.0), 2.0 / (27.0 * 4.0), 1e-16);
  EXPECT_NEAR(force_geometric_factor(1.0, 1e-6) / (1.0 / (4e-12)), 1.0, 1e-5);
  EXPECT_NEAR(spring_geometric_factor(1.0, 1e-6) / (1.0 / (8e-18)), 1.0, 1e-5);
}

TEST(Totals, ForceExample) {
  const TipSampleGeometry g(1e-6, 1e-8);
  const Vector3 f = total_force(g, si_unit_material());
  const double gf = 1e-18 / (1e-16 * 2.01e-6 * 2.01e-6);
  EXPECT_NEAR(gf / 2.4752e9, 1.0, 1e-4);
  EXPECT_NEAR(f.norm() / (1.1437717579874623 * gf), 1.0, 1e-12);
  EXPECT_NEAR(f.normalized().dot(g.normal), -1.0, 1e-15);
}

TEST(Totals, SpringIsForceDerivative) {
  const auto m = unit_material();
  for (double h : {0.01, 0.3, 1.0, 4.0}) {
    const double r = 1.0;
    const double dh = 1e-5 * h;
    const double up = total_force(TipSampleGeometry(r, h + dh), m).dot(Vector3::UnitZ());
    const double down = total_force(TipSampleGeometry(r, h - dh), m).dot(Vector3::UnitZ());
    // Moving the tip along n widens the gap: k_nn = -d(f . n)/dh.
    const double k_fd = -(up - down) / (2.0 * dh);
    const double k_nn = total_spring(TipSampleGeometry(r, h), m)(2, 2);
    EXPECT_NEAR(k_fd / k_nn, 1.0, 1e-8) << h;
  }
}

TEST(Totals, NoiseStructureAndSpringRatio) {
  const auto m = si_unit_material();
  const Vector3 n = Vector3(1.0, 2.0, 2.0) / 3.0;
  for (double h : {1e-9, 1e-7, 1e-6, 5e-6}) {
    const TipSampleGeometry g(1e-6, h, n);
    const Matrix3 s = total_noise(g, m);
    const Matrix3 k = total_spring(g, m);
    const double s_nn = n.dot(s * n);
    const double k_nn = n.dot(k * n);
    EXPECT_LT(k_nn, 0.0);
    EXPECT_NEAR(s_nn / std::abs(k_nn) / kHbar / 1.8298438139466457, 1.0, 1e-12);
    EXPECT_LT((s * n - s_nn * n).norm(), 1e-14 * s_nn);
    const Eigen::SelfAdjointEigenSolver<Matrix3> eig(s);
    EXPECT_NEAR(eig.eigenvalues()[0] / (s_nn / 24.0), 1.0, 1e-12);
    EXPECT_NEAR(eig.eigenvalues()[1] / (s_nn / 24.0), 1.0, 1e-12);
    EXPECT_NEAR(eig.eigenvalues()[2] / s_nn, 1.0, 1e-12);
  }
  const TipSampleGeometry g(1e-6, 1e-8);
  EXPECT_NEAR(total_noise(g, m)(2, 2) / kHbar /
                  (8.3716947036809514 * spring_geometric_factor(1e-6, 1e-8)),
              1.0, 1e-12);
}

TEST(Totals, ScaleLinearlyInDensitiesAndCoupling) {
  const TipSampleGeometry g(2.0, 0.5);
  const auto base = unit_material();
  const MaterialSpec scaled(3.0, 5.0, DipoleCoupling{2.0}, SpectralDistribution::debye(1.0));
  EXPECT_NEAR(total_force(g, scaled).norm() / total_force(g, base).norm(), 60.0, 1e-12);
  EXPECT_NEAR(total_noise(g, scaled)(2, 2) / total_noise(g, base)(2, 2), 60.0, 1e-12);
  const MaterialSpec hot(1.0, 1.0, DipoleCoupling{1.0}, SpectralDistribution::debye(2.0));
  EXPECT_NEAR(total_spring(g, hot)(2, 2) / total_spring(g, base)(2, 2), 0.5, 1e-14);
}

TEST(Totals, TransverseRatioApproachesSmallGapCoefficient) {
  const auto m = si_unit_material();
  std::array<double, 3> deviation{};
  const std::array<double, 3> ratios = {1e-2, 1e-3, 1e-4};
  for (std::size_t i = 0; i < 3; ++i) {
    const double r = 1.0;
    const double h = ratios[i] * r;
    const TipSampleGeometry g(r, h);
    const double s_tt = total_noise(g, m)(0, 0);
    const double f_over_h = total_force(g, m).norm() / h;
    deviation[i] = s_tt / f_over_h / kHbar / 0.1524869844955538 - 1.0;
  }
  EXPECT_LT(std::abs(deviation[2]), 1e-3);
  // First order: the deviation drops tenfold per decade.
  EXPECT_NEAR(deviation[0] / deviation[1], 10.0, 0.2);
  EXPECT_NEAR(deviation[1] / deviation[2], 10.0, 0.2);
}

TEST(Geometry, Validation) {
  EXPECT_THROW(TipSampleGeometry(1.0, 0.0), DomainError);
  EXPECT_THROW(TipSampleGeometry(-1.0, 1.0), DomainError);
  EXPECT_THROW(TipSampleGeometry(1.0, 1.0, Vector3(1.0, 1.0, 0.0)), DomainError);
  EXPECT_THROW(MaterialSpec(0.0, 1.0, DipoleCoupling{1.0}, SpectralDistribution::debye(1.0)),
               DomainError);
}

class GeometryMc : public ::testing::TestWithParam<double> {};

TEST_P(GeometryMc, ForceSpringAndNormalNoiseWithinThreeSigma) {
  const double r_over_h = GetParam();
  const TipSampleGeometry g(1.0, 1.0 / r_over_h, Vector3(0.0, 0.6, 0.8));
  const auto m = unit_material();
  QuadratureSettings s;
  s.mc_samples = 200'000;
  const auto mc = total_mc(g, m, s);
  const Matrix3 rot = frame_rotation(g);
  const Vector3 f_local = rot.transpose() * mc.force.value;
  const Matrix3 k_local = rot.transpose() * mc.spring.value * rot;
  const Matrix3 s_local = rot.transpose() * mc.noise.value * rot;
  const double f_closed = -total_force(g, m).norm();
  const double k_closed = g.normal.dot(total_spring(g, m) * g.normal);
  const double s_closed = g.normal.dot(total_noise(g, m) * g.normal);
  EXPECT_LE(std::abs(f_local.z() - f_closed), 3.0 * mc.force.std_error.z());
  EXPECT_LE(std::abs(k_local(2, 2) - k_closed), 3.0 * mc.spring.std_error(2, 2));
  EXPECT_LE(std::abs(k_local(0, 0)), 3.0 * mc.spring.std_error(0, 0) + 1e-9 * std::abs(k_closed));
  EXPECT_LE(std::abs(s_local(2, 2) - s_closed), 3.0 * mc.noise.std_error(2, 2));
  EXPECT_LT(mc.force.std_error.z(), 0.02 * std::abs(f_closed));
}

TEST_P(GeometryMc, TransverseNoiseFromPairwiseSumIsOneSixthOfNormal) {
  const TipSampleGeometry g(1.0, 1.0 / GetParam());
  QuadratureSettings s;
  s.mc_samples = 100'000;
  const auto mc = total_mc(g, unit_material(), s);
  EXPECT_NEAR(mc.noise.value(0, 0) / mc.noise.value(2, 2), 1.0 / 6.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(RadiusOverGap, GeometryMc, ::testing::Values(1.0, 10.0, 100.0));

TEST(GeometryMcDeterminism, SeedFixedRerunsAreIdentical) {
  const TipSampleGeometry g(1.0, 0.1);
  QuadratureSettings s;
  s.mc_samples = 100'000;
  const auto a = total_mc(g, unit_material(), s);
  const auto b = total_mc(g, unit_material(), s);
  EXPECT_EQ(a.force.value, b.force.value);
  EXPECT_EQ(a.noise.value, b.noise.value);
  s.mc_samples = 1'000;
  EXPECT_THROW(total_mc(g, unit_material(), s), DomainError);
}

TEST(ModeShape, LinearAndReplica) {
  EXPECT_DOUBLE_EQ(mode_length(ModeShape::linear(2.5)), 2.5);
  std::vector<double> z(1000);
  std::vector<double> phi(1000);
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = 2.5 * static_cast<double>(i) / 999.0;
    phi[i] = z[i] / 2.5;
  }
  phi.back() = 1.0;
  EXPECT_NEAR(mode_length(ModeShape::tabulated(z, phi)) / 2.5, 1.0, 1e-6);
}

TEST(ModeShape, EulerBernoulliModes) {
  EXPECT_NEAR(ModeShape::clamped_free_root(1), 1.875104068711961, 1e-13);
  EXPECT_NEAR(ModeShape::clamped_free_root(2), 4.694091132974175, 1e-12);
  const std::array<double, 3> expected = {0.860626244570373, 0.1233905285414446,
                                          0.05174718496583109};
  for (int n = 1; n <= 3; ++n) {
    const auto shape = ModeShape::euler_bernoulli(n, 2.0);
    EXPECT_NEAR(shape.value(2.0), 1.0, 1e-12);
    EXPECT_NEAR(shape.value(0.0), 0.0, 1e-12);
    EXPECT_NEAR(shape.slope(0.0), 0.0, 1e-10);
    EXPECT_NEAR(mode_length(shape) / 2.0, expected[static_cast<std::size_t>(n - 1)], 1e-10) << n;
  }
  // High modes stay finite and normalized.
  const auto high = ModeShape::euler_bernoulli(30, 1.0);
  EXPECT_NEAR(high.value(1.0), 1.0, 1e-12);
  EXPECT_TRUE(std::isfinite(mode_length(high)));
  EXPECT_THROW(ModeShape::euler_bernoulli(0, 1.0), DomainError);
}

TEST(ModeShape, TabulatedValidationAndCsv) {
  EXPECT_THROW(ModeShape::tabulated({0.0, 1.0}, {0.0, 0.99}), DomainError);
  EXPECT_THROW(ModeShape::tabulated({0.0, 1.0}, {0.1, 1.0}), DomainError);
  const auto path = std::filesystem::temp_directory_path() / "casimir_test_mode.csv";
  {
    std::ofstream out(path);
    out << "z,phi\n0,0\n0.5,0.25\n1,1\n";
  }
  const auto shape = ModeShape::from_csv(path);
  EXPECT_NEAR(mode_length(shape), 1.0 / (0.0625 / 0.5 + 0.5625 / 0.5), 1e-15);
  {
    std::ofstream out(path);
    out << "z,phi\n0,0\n1,0.5\n";
  }
  EXPECT_THROW(ModeShape::from_csv(path), ConfigError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace casimir
