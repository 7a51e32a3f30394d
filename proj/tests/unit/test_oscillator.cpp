#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"
#include "casimir/oscillator.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(OscillatorSpec, Invariants) {
  EXPECT_THROW(OscillatorSpec(0.0, 0.0), DomainError);
  EXPECT_THROW(OscillatorSpec(1.0, -0.1), DomainError);
  EXPECT_THROW(OscillatorSpec(1.0, 2.0), DomainError);
  EXPECT_NEAR(OscillatorSpec(1.0, 0.1).damped_frequency(), std::sqrt(1.0 - 0.0025), 1e-15);
}

TEST(AutocorrExact, UndampedIsCosine) {
  const OscillatorSpec spec(1.3, 0.0);
  for (double tau : {0.0, 0.7, 12.0}) {
    EXPECT_DOUBLE_EQ(autocorr_exact(spec, tau), 0.5 * kHbar * std::cos(1.3 * tau));
    EXPECT_DOUBLE_EQ(autocorr_weak(spec, tau), autocorr_exact(spec, tau));
  }
}

TEST(AutocorrExact, ZeroLagClosedForm) {
  const OscillatorSpec spec(1.0, 0.1);
  const double wbar = spec.damped_frequency();
  const double expected =
      0.5 * kHbar * (1.0 / wbar) * (1.0 - 2.0 / kPi * std::atan(0.1 / (2.0 * wbar)));
  EXPECT_NEAR(autocorr_exact(spec, 0.0) / expected, 1.0, 1e-14);
  EXPECT_NEAR(autocorr_exact(spec, 0.0) / kHbar, 0.48468410102, 1e-10);
}

TEST(AutocorrExact, FrozenValue) {
  EXPECT_NEAR(autocorr_exact(OscillatorSpec(1.0, 0.1), 10.0) / kHbar, -0.2571141706, 1e-10);
}

TEST(AutocorrExact, EvenInLag) {
  const OscillatorSpec spec(2.0, 0.3);
  for (double tau : {0.1, 1.0, 30.0}) {
    EXPECT_EQ(autocorr_exact(spec, tau), autocorr_exact(spec, -tau));
  }
}

TEST(AutocorrExact, MatchesQuadratureOracleOnGrid) {
  for (double ratio : {1e-3, 1e-2, 0.1, 0.5}) {
    for (double omega : {1.0, 2.0}) {
      const OscillatorSpec spec(omega, ratio * omega);
      for (double tw : {0.0, 0.5, 3.0, 10.0, 40.0, 100.0}) {
        const double tau = tw / omega;
        const double exact = autocorr_exact(spec, tau);
        const double quad = autocorr_quadrature(spec, tau);
        EXPECT_LE(std::abs(exact - quad), 1e-8 * std::abs(quad) + 1e-13 * kHbar)
            << "ratio " << ratio << " omega " << omega << " tau " << tau;
      }
    }
  }
}

TEST(AutocorrQuadrature, UndampedLimit) {
  double previous_error = 1.0;
  for (double gamma : {1e-2, 1e-3, 1e-4}) {
    const double v = autocorr_quadrature(OscillatorSpec(1.0, gamma), 1.0);
    const double error = std::abs(v - 0.5 * kHbar * std::cos(1.0));
    EXPECT_LT(error, previous_error);
    previous_error = error;
  }
  EXPECT_LT(previous_error, 1e-3 * kHbar);
}

TEST(AutocorrWeak, DeviationBoundedByDampingScale) {
  const OscillatorSpec spec(1.0, 0.01);
  EXPECT_EQ(autocorr_weak(spec, 0.0), 0.5 * kHbar);
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double tau = 0.1 * i;
    worst = std::max(worst, std::abs(autocorr_exact(spec, tau) - autocorr_weak(spec, tau)));
  }
  EXPECT_LE(worst, 0.02 * 0.5 * kHbar);
}

TEST(AutocorrExact, SqueezingTermNegativeAndInverseSquare) {
  const OscillatorSpec spec(1.0, 0.05);
  EXPECT_LT(autocorr_exact(spec, 0.0) - autocorr_weak(spec, 0.0), 0.0);
  const double wbar = spec.damped_frequency();
  for (double tau : {60.0, 200.0}) {
    const double squeeze = autocorr_exact(spec, tau) - autocorr_weak(spec, tau) / wbar;
    const double anchor = -(kHbar / kPi) / wbar * 0.05 * wbar / (tau * tau);
    EXPECT_NEAR(squeeze / anchor, 1.0, 0.1) << tau;
  }
}

TEST(PositionSpectrum, ShapeAndParseval) {
  const OscillatorSpec spec(1.0, 0.05);
  EXPECT_EQ(position_spectrum(spec, 0.0), 0.0);
  EXPECT_EQ(position_spectrum(spec, 0.7), position_spectrum(spec, -0.7));
  // Peak near omega_a.
  double best = 0.0;
  double best_w = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double w = 0.9 + 2e-6 * i;
    const double v = position_spectrum(spec, w);
    if (v > best) {
      best = v;
      best_w = w;
    }
  }
  EXPECT_LE(std::abs(best_w - 1.0), 0.05 * 0.05 / 1.0);
  QuadratureSettings s;
  s.rel_tol = 1e-12;
  const std::array<double, 3> br = {0.9, 1.0, 1.1};
  const double total = 2.0 * integrate_adaptive([&spec](double w) { return position_spectrum(spec, w); },
                                               0.0, std::numeric_limits<double>::infinity(), s, br);
  EXPECT_NEAR(total / (2.0 * kPi) / autocorr_exact(spec, 0.0), 1.0, 1e-6);
  EXPECT_THROW(position_spectrum(OscillatorSpec(1.0, 0.0), 1.0), DomainError);
}

TEST(BandPowerFraction, LorentzianCapture) {
  const OscillatorSpec spec(1.0, 1e-3);
  EXPECT_NEAR(band_power_fraction(spec, std::numeric_limits<double>::infinity()), 1.0, 1e-9);
  EXPECT_NEAR(band_power_fraction(spec, 0.5e-3), 0.5, 0.01);
  EXPECT_GE(band_power_fraction(spec, 5e-3), 0.93);
  const double f = band_power_fraction(OscillatorSpec(1.0, 0.2), 0.05);
  EXPECT_GT(f, 0.0);
  EXPECT_LT(f, 1.0);
}

TEST(LangevinForceSpectrum, Limits) {
  const OscillatorSpec spec(1.0, 0.1);
  EXPECT_DOUBLE_EQ(langevin_force_spectrum(spec, 1.0, 0.0), 0.1 * kHbar);
  EXPECT_DOUBLE_EQ(langevin_force_spectrum(spec, -3.0, 0.0), 0.1 * kHbar * 3.0);
  EXPECT_NEAR(langevin_force_spectrum(spec, 1e-6, 300.0) / (0.1 * 2.0 * kBoltzmann * 300.0), 1.0,
              1e-12);
}

}  // namespace
}  // namespace casimir
