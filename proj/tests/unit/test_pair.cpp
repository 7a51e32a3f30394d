#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"
#include "casimir/pair.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;

PairSpec make(double wa, double wb, double ga, double gb, double beta) {
  return PairSpec(OscillatorSpec(wa, ga), OscillatorSpec(wb, gb), beta);
}

TEST(PairSpec, WeakCouplingInvariant) {
  EXPECT_THROW(make(1.0, 2.0, 0.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(make(1.0, 2.0, 0.0, 0.0, -1.5), DomainError);
  EXPECT_NO_THROW(make(1.0, 2.0, 0.0, 0.0, 0.999));
}

TEST(CrossExpectation, LeadingTerm) {
  EXPECT_NEAR(cross_expectation(make(1.0, 2.0, 0.0, 0.0, 1e-3)) / kHbar, 1e-3 / 6.0, 1e-18);
}

TEST(CrossExpectation, DampingCorrection) {
  const double v = cross_expectation(make(1.0, 2.0, 1e-3, 1e-3, 1e-3)) / kHbar;
  const double correction = 1e-3 * 2.0 / (2.0 * kPi * 9.0) * (-2.25e-3 + 0.0);
  // Bracket: 1 - 1/4 + ln(1/4) and 1 - 4 + ln 4, each times 1e-3.
  const double bracket = 1e-3 * ((0.75 - std::log(4.0)) + (-3.0 + std::log(4.0)));
  EXPECT_NEAR(bracket, -2.25e-3, 1e-15);
  EXPECT_NEAR(v, 1e-3 / 6.0 + correction, 1e-15);
  EXPECT_NEAR(v, 1.66587e-4, 1e-9);
}

TEST(CrossExpectation, FiniteAtDegeneracy) {
  const double v = cross_expectation(make(1.0, 1.0 + 1e-9, 0.0, 0.0, 1e-3)) / kHbar;
  EXPECT_NEAR(v / 2.5e-4, 1.0, 1e-8);
  const double damped = cross_expectation(make(1.0, 1.0, 1e-3, 2e-3, 1e-3));
  EXPECT_TRUE(std::isfinite(damped));
}

TEST(CrossExpectation, ContinuousThroughSeriesSwitch) {
  for (double ga : {1e-3, 0.05}) {
    for (double gb : {1e-3, 0.02}) {
      const double edge = kDegeneracySwitch;
      // Splitting d = (wa - wb)/(wa + wb) just inside and outside the switch.
      auto at = [&](double d) {
        const double wa = 1.0 + d;
        const double wb = 1.0 - d;
        return cross_expectation(make(wa, wb, ga, gb, 1e-2));
      };
      const double inside = at(edge * (1.0 - 1e-9));
      const double outside = at(edge * (1.0 + 1e-9));
      EXPECT_LE(std::abs(inside - outside), 1e-10 * std::abs(outside));
      const double inside_neg = at(-edge * (1.0 - 1e-9));
      const double outside_neg = at(-edge * (1.0 + 1e-9));
      EXPECT_LE(std::abs(inside_neg - outside_neg), 1e-10 * std::abs(outside_neg));
    }
  }
}

TEST(CrossExpectation, SymmetriesAndLinearDampingShift) {
  const PairSpec p = make(1.0, 1.7, 2e-3, 5e-3, 0.02);
  const PairSpec swapped(p.b, p.a, p.beta);
  const PairSpec flipped(p.a, p.b, -p.beta);
  EXPECT_NEAR(cross_expectation(p), cross_expectation(swapped), 1e-15 * std::abs(cross_expectation(p)));
  EXPECT_EQ(cross_expectation(flipped), -cross_expectation(p));

  const double base = cross_expectation(make(1.0, 1.7, 0.0, 0.0, 0.02));
  const double d1 = cross_expectation(make(1.0, 1.7, 1e-3, 1e-3, 0.02)) - base;
  const double d2 = cross_expectation(make(1.0, 1.7, 2e-3, 2e-3, 0.02)) - base;
  EXPECT_NEAR(d2 / d1, 2.0, 1e-9);
  EXPECT_LE(std::abs(d1), 2e-3 * kHbar * 0.02);
}

TEST(ExactUndamped, EqualFrequencyClosedForm) {
  const double v = cross_expectation_exact_undamped(make(1.0, 1.0, 0.0, 0.0, 0.1));
  const double expected = 0.25 * kHbar * (std::sqrt(1.0 / 0.9) - std::sqrt(1.0 / 1.1));
  EXPECT_NEAR(v / expected, 1.0, 1e-12);
  EXPECT_NEAR(v / kHbar, 0.025157491035966872, 1e-15);
  EXPECT_EQ(cross_expectation_exact_undamped(make(1.0, 3.0, 0.0, 0.0, 0.0)), 0.0);
}

TEST(ExactUndamped, PerturbativeAgreementIsSecondOrder) {
  for (auto [wa, wb] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {1.0, 1.5}, {3.0, 1.0}}) {
    const double w = std::min(wa, wb);
    for (double ratio : {1e-1, 1e-2, 1e-3}) {
      const PairSpec p = make(wa, wb, 0.0, 0.0, ratio * w);
      const double exact = cross_expectation_exact_undamped(p);
      const double approx = cross_expectation(p);
      EXPECT_LE(std::abs(approx - exact) / std::abs(exact), 2.0 * ratio * ratio)
          << wa << "," << wb << " ratio " << ratio;
    }
  }
}

TEST(ExactUndamped, RejectsDampingAndStrongCoupling) {
  EXPECT_THROW(cross_expectation_exact_undamped(make(1.0, 1.0, 0.1, 0.0, 0.1)), DomainError);
}

TEST(PairNoise, AutocorrelationForms) {
  EXPECT_DOUBLE_EQ(pair_noise_autocorr(make(1.0, 2.0, 0.3, 0.1, 0.0), 0.0), 0.25 * kHbar * kHbar);
  EXPECT_DOUBLE_EQ(pair_noise_autocorr(make(1.0, 2.0, 0.0, 0.0, 0.0), 0.7),
                   0.25 * kHbar * kHbar * std::cos(0.7) * std::cos(1.4));
  const double wbar = std::sqrt(1.0 - 2.5e-5);
  EXPECT_NEAR(pair_noise_autocorr(make(1.0, 1.0, 0.01, 0.01, 0.0), 100.0) / (kHbar * kHbar),
              0.25 * std::exp(-1.0) * std::pow(std::cos(wbar * 100.0), 2), 1e-15);
}

TEST(PairNoise, SpectrumShapeAndParseval) {
  const PairSpec equal = make(1.0, 1.0, 1e-3, 1e-3, 0.0);
  EXPECT_NEAR(pair_noise_spectrum(equal, 0.0) / (kHbar * kHbar / (4.0 * 1e-3)), 1.0, 1e-5);
  const PairSpec p = make(1.0, 1.6, 0.02, 0.04, 0.0);
  EXPECT_EQ(pair_noise_spectrum(p, 0.3), pair_noise_spectrum(p, -0.3));
  EXPECT_GE(pair_noise_spectrum(p, 2.6), 0.0);
  EXPECT_NEAR(pair_noise_spectrum(p, 1e4) * 1e8 / (kHbar * kHbar), 4.0 * 0.03 / 8.0, 1e-6);

  QuadratureSettings s;
  s.rel_tol = 1e-12;
  const double wa = p.a.damped_frequency();
  const double wb = p.b.damped_frequency();
  const std::array<double, 2> br = {wb - wa, wa + wb};
  const double total = 2.0 * integrate_adaptive([&p](double w) { return pair_noise_spectrum(p, w); },
                                               0.0, std::numeric_limits<double>::infinity(), s, br);
  EXPECT_NEAR(total / (2.0 * kPi) / pair_noise_autocorr(p, 0.0), 1.0, 1e-6);
  EXPECT_THROW(pair_noise_spectrum(make(1.0, 1.0, 0.0, 0.0, 0.0), 0.0), DomainError);
}

TEST(PairNoise, SpectrumIsFourierTransformOfAutocorrelation) {
  const PairSpec p = make(1.0, 1.6, 0.05, 0.07, 0.0);
  QuadratureSettings s;
  s.rel_tol = 1e-11;
  for (double w : {0.0, 0.4, 2.5}) {
    const double ft = 2.0 * integrate_fourier_cos(
                                [&p](double t) { return pair_noise_autocorr(p, t); }, 0.0, w, s);
    EXPECT_NEAR(ft / pair_noise_spectrum(p, w), 1.0, 1e-6) << w;
  }
}

}  // namespace
}  // namespace casimir
