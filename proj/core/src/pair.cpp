#include "casimir/pair.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "casimir/error.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;

// 1 - e^s + s, evaluated without cancellation for small s.
double one_minus_exp_plus(double s) {
  if (std::abs(s) < 1e-2) {
    // -(s^2/2 + s^3/6 + s^4/24 + s^5/120 + s^6/720)
    const double s2 = s * s;
    return -s2 * (0.5 + s * (1.0 / 6.0 + s * (1.0 / 24.0 + s * (1.0 / 120.0 + s / 720.0))));
  }
  return -std::expm1(s) + s;
}

// Damping correction of <q_a q_b> divided by hbar beta.
double damping_correction(const PairSpec& pair) {
  const double wa = pair.a.omega;
  const double wb = pair.b.omega;
  const double ga = pair.a.gamma;
  const double gb = pair.b.gamma;
  if (ga == 0.0 && gb == 0.0) return 0.0;
  const double mean = 0.5 * (wa + wb);
  const double split = (wa - wb) / (wa + wb);
  if (std::abs(split) < kDegeneracySwitch) {
    // Second-order expansion in the splitting about w_a = w_b.
    const double sum = ga + gb;
    return (-0.25 * sum * (1.0 + split * split) - (ga - gb) * split / 3.0) /
           (kPi * mean * mean);
  }
  // s = ln(w_a^2 / w_b^2).
  const double s = 2.0 * std::log(wa / wb);
  const double bracket = ga * one_minus_exp_plus(s) + gb * one_minus_exp_plus(-s);
  const double diff = (wa - wb) * (wa + wb);
  return wa * wb / (2.0 * kPi * diff * diff) * bracket;
}

}  // namespace

PairSpec::PairSpec(OscillatorSpec a_in, OscillatorSpec b_in, double beta_in)
    : a(a_in), b(b_in), beta(beta_in) {
  if (!std::isfinite(beta) || !(std::abs(beta) < std::min(a.omega, b.omega))) {
    throw DomainError("PairSpec: |beta| must be < min(omega_a, omega_b)");
  }
}

double cross_expectation(const PairSpec& pair) {
  const double leading = kHbar * pair.beta / (2.0 * (pair.a.omega + pair.b.omega));
  return leading + kHbar * pair.beta * damping_correction(pair);
}

double cross_expectation_exact_undamped(const PairSpec& pair) {
  if (pair.a.gamma != 0.0 || pair.b.gamma != 0.0) {
    throw DomainError("cross_expectation_exact_undamped: requires gamma_a = gamma_b = 0");
  }
  // H = p^T W p / 2 + q^T V q / 2 with W = diag(w_a, w_b). With q = W^{1/2} y
  // the kinetic term is canonical and the potential is K = W^{1/2} V W^{1/2};
  // the ground state has <y y^T> = (hbar/2) K^{-1/2}.
  const double wa = pair.a.omega;
  const double wb = pair.b.omega;
  const double sa = std::sqrt(wa);
  const double sb = std::sqrt(wb);
  Eigen::Matrix2d k;
  k << wa * wa, -pair.beta * sa * sb, -pair.beta * sa * sb, wb * wb;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(k);
  if (solver.info() != Eigen::Success) {
    throw DomainError("cross_expectation_exact_undamped: diagonalization failed");
  }
  const Eigen::Vector2d lambda = solver.eigenvalues();
  if (!(lambda.minCoeff() > 0.0)) {
    throw DomainError(
        "cross_expectation_exact_undamped: coupling too strong, quadratic form not "
        "positive definite");
  }
  const Eigen::Matrix2d& u = solver.eigenvectors();
  const Eigen::Matrix2d inv_sqrt =
      u * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * u.transpose();
  return 0.5 * kHbar * sa * sb * inv_sqrt(0, 1);
}

double pair_noise_autocorr(const PairSpec& pair, double tau) {
  return autocorr_weak(pair.a, tau) * autocorr_weak(pair.b, tau);
}

double pair_noise_spectrum(const PairSpec& pair, double omega) {
  const double width = 0.5 * (pair.a.gamma + pair.b.gamma);
  if (!(width > 0.0)) {
    throw DomainError("pair_noise_spectrum: requires gamma_a + gamma_b > 0");
  }
  const double wa = pair.a.damped_frequency();
  const double wb = pair.b.damped_frequency();
  const std::array<double, 4> centers = {wa - wb, wb - wa, wa + wb, -(wa + wb)};
  double sum = 0.0;
  for (double c : centers) {
    const double d = omega - c;
    sum += width / (width * width + d * d);
  }
  return kHbar * kHbar / 8.0 * sum;
}

}  // namespace casimir
