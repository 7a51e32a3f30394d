#include "casimir/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "casimir/constants.hpp"
#include "casimir/csv.hpp"
#include "casimir/error.hpp"
#include "casimir/pair.hpp"

namespace casimir {
namespace {

// Integral over v in [0, 1] of v^n e^{-x v}, x >= 0.
double moment_exp(int n, double x) {
  if (x < 1.0) {
    double term = 1.0;  // (-x)^k / k!
    double sum = 0.0;
    for (int k = 0; k < 60; ++k) {
      const double add = term / (k + n + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
      term *= -x / (k + 1);
    }
    return sum;
  }
  const double e = std::exp(-x);
  switch (n) {
    case 0:
      return -std::expm1(-x) / x;
    case 1:
      return (1.0 - e * (1.0 + x)) / (x * x);
    default:
      return (2.0 - e * (x * x + 2.0 * x + 2.0)) / (x * x * x);
  }
}

std::vector<double> merged_breakpoints(std::vector<double> points, double lo, double hi) {
  std::erase_if(points, [lo, hi](double p) { return !(p > lo && p < hi); });
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

SpectralDistribution SpectralDistribution::debye(double omega_d) {
  if (!(omega_d > 0.0) || !std::isfinite(omega_d)) {
    throw DomainError("SpectralDistribution: omega_D must be finite and > 0");
  }
  SpectralDistribution d;
  d.debye_ = true;
  d.omega_ = {0.0, omega_d};
  return d;
}

SpectralDistribution SpectralDistribution::tabulated(std::vector<double> omega,
                                                     std::vector<double> p) {
  if (omega.size() != p.size()) {
    throw DomainError("SpectralDistribution: omega and p must have equal length");
  }
  if (omega.size() < 2) {
    throw DomainError("SpectralDistribution: a table needs at least two points");
  }
  if (!(omega.front() >= 0.0)) {
    throw DomainError("SpectralDistribution: frequencies must be >= 0");
  }
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!std::isfinite(omega[i]) || !std::isfinite(p[i])) {
      throw DomainError("SpectralDistribution: non-finite table entry at row " +
                        std::to_string(i));
    }
    if (p[i] < 0.0) {
      throw DomainError("SpectralDistribution: negative density at row " +
                        std::to_string(i));
    }
    if (i > 0 && !(omega[i] > omega[i - 1])) {
      throw DomainError("SpectralDistribution: frequency grid must be strictly increasing");
    }
  }
  double norm = 0.0;
  for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
    norm += 0.5 * (p[i] + p[i + 1]) * (omega[i + 1] - omega[i]);
  }
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("SpectralDistribution: density integrates to zero or overflows");
  }
  for (double& v : p) v /= norm;
  SpectralDistribution d;
  d.omega_ = std::move(omega);
  d.p_ = std::move(p);
  return d;
}

SpectralDistribution SpectralDistribution::from_csv(const std::filesystem::path& path) {
  TwoColumnTable table = read_two_column_csv(path, "omega", "p");
  try {
    return tabulated(std::move(table.first), std::move(table.second));
  } catch (const DomainError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

double SpectralDistribution::debye_frequency() const {
  if (!debye_) throw DomainError("SpectralDistribution: not a Debye distribution");
  return omega_.back();
}

double SpectralDistribution::support_min() const { return omega_.front(); }
double SpectralDistribution::support_max() const { return omega_.back(); }

double SpectralDistribution::pdf(double omega) const {
  if (!(omega >= omega_.front() && omega <= omega_.back())) return 0.0;
  if (debye_) {
    const double u = omega / omega_.back();
    return 3.0 * u * u / omega_.back();
  }
  auto it = std::upper_bound(omega_.begin(), omega_.end(), omega);
  if (it == omega_.end()) return p_.back();
  const std::size_t i = static_cast<std::size_t>(it - omega_.begin()) - 1;
  const double t = (omega - omega_[i]) / (omega_[i + 1] - omega_[i]);
  return p_[i] + t * (p_[i + 1] - p_[i]);
}

double SpectralDistribution::integral_of_square() const {
  double total = 0.0;
  if (debye_) {
    total = 9.0 / (5.0 * omega_.back());
  } else {
    for (std::size_t i = 0; i + 1 < omega_.size(); ++i) {
      const double a = p_[i];
      const double b = p_[i + 1];
      total += (a * a + a * b + b * b) * (omega_[i + 1] - omega_[i]) / 3.0;
    }
  }
  if (!std::isfinite(total)) {
    throw DivergenceError("SpectralDistribution: integral of p^2 does not exist");
  }
  return total;
}

double SpectralDistribution::laplace(double s) const {
  if (!(s >= 0.0)) throw DomainError("SpectralDistribution::laplace: requires s >= 0");
  if (debye_) return 3.0 * moment_exp(2, s * omega_.back());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < omega_.size(); ++i) {
    const double decay = s * omega_[i];
    if (decay > 745.0) break;
    const double width = omega_[i + 1] - omega_[i];
    const double x = s * width;
    total += std::exp(-decay) * width *
             (p_[i] * moment_exp(0, x) + (p_[i + 1] - p_[i]) * moment_exp(1, x));
  }
  return total;
}

double averaged_cross_expectation(const SpectralDistribution& dist, double beta,
                                  const QuadratureSettings& settings) {
  if (!std::isfinite(beta)) throw DomainError("averaged_cross_expectation: beta must be finite");
  if (dist.is_debye()) {
    return coefficients::kDebyeCrossExpectation * kHbar * beta / dist.debye_frequency();
  }
  if (beta == 0.0) return 0.0;
  const double w = dist.support_max();
  const std::vector<double> breaks = {0.1 / w, 1.0 / w, 10.0 / w, 100.0 / w};
  const double average = integrate_adaptive(
      [&dist](double s) {
        const double p = dist.laplace(s);
        return p * p;
      },
      0.0, std::numeric_limits<double>::infinity(), settings, breaks);
  return 0.5 * kHbar * beta * average;
}

double averaged_cross_expectation_quadrature(const SpectralDistribution& dist,
                                             double beta,
                                             const QuadratureSettings& settings) {
  if (!std::isfinite(beta)) throw DomainError("averaged_cross_expectation: beta must be finite");
  const double lo = dist.support_min();
  const double hi = dist.support_max();
  const std::vector<double> knots(dist.knots().begin(), dist.knots().end());
  const std::vector<double> inner_breaks = merged_breakpoints(knots, lo, hi);
  QuadratureSettings inner = settings;
  inner.rel_tol = settings.rel_tol * 0.1;
  auto outer = [&](double a) {
    const double pa = dist.pdf(a);
    if (pa == 0.0) return 0.0;
    const double row = integrate_adaptive(
        [&dist, a](double b) { return a + b > 0.0 ? dist.pdf(b) / (a + b) : 0.0; }, lo,
        hi, inner, inner_breaks);
    return pa * row;
  };
  const double average = integrate_adaptive(outer, lo, hi, settings, inner_breaks);
  return 0.5 * kHbar * beta * average;
}

double averaged_pair_noise_dc(const SpectralDistribution& dist) {
  return 0.25 * std::numbers::pi * kHbar * kHbar * dist.integral_of_square();
}

double averaged_pair_noise_dc_finite_gamma(const SpectralDistribution& dist,
                                           double gamma,
                                           const QuadratureSettings& settings) {
  const double hi = dist.support_max();
  if (!(gamma > 0.0) || !(gamma < 0.5 * hi)) {
    throw DomainError("averaged_pair_noise_dc_finite_gamma: requires 0 < gamma << omega_max");
  }
  const double lo = std::max(dist.support_min(), gamma);
  const std::vector<double> knots(dist.knots().begin(), dist.knots().end());
  std::vector<double> outer_points = knots;
  for (double k : {1.0, 10.0, 100.0}) {
    outer_points.push_back(lo + k * gamma);
    outer_points.push_back(hi - k * gamma);
  }
  const std::vector<double> outer_breaks = merged_breakpoints(outer_points, lo, hi);
  QuadratureSettings inner = settings;
  inner.rel_tol = settings.rel_tol * 0.1;
  const double hbar2 = kHbar * kHbar;

  auto outer = [&](double a) {
    const double pa = dist.pdf(a);
    if (pa == 0.0) return 0.0;
    std::vector<double> points = knots;
    for (double k : {-100.0, -10.0, -1.0, 0.0, 1.0, 10.0, 100.0}) {
      points.push_back(a + k * gamma);
    }
    const std::vector<double> breaks = merged_breakpoints(std::move(points), lo, hi);
    const OscillatorSpec osc_a(a, gamma);
    const double row = integrate_adaptive(
        [&](double b) {
          const PairSpec pair(osc_a, OscillatorSpec(b, gamma), 0.0);
          return dist.pdf(b) * pair_noise_spectrum(pair, 0.0) / hbar2;
        },
        lo, hi, inner, breaks);
    return pa * row;
  };
  return hbar2 * integrate_adaptive(outer, lo, hi, settings, outer_breaks);
}

double averaged_pair_noise_dc_extrapolated(const SpectralDistribution& dist,
                                           std::array<double, 3> gammas,
                                           const QuadratureSettings& settings) {
  Eigen::Matrix3d m;
  Eigen::Vector3d rhs;
  for (int i = 0; i < 3; ++i) {
    const double g = gammas[static_cast<std::size_t>(i)];
    m(i, 0) = 1.0;
    m(i, 1) = g * std::log(g);
    m(i, 2) = g;
    rhs(i) = averaged_pair_noise_dc_finite_gamma(dist, g, settings);
  }
  const Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
  if (!lu.isInvertible()) {
    throw DomainError("averaged_pair_noise_dc_extrapolated: gammas must be distinct");
  }
  return lu.solve(rhs)(0);
}

}  // namespace casimir
