#include <algorithm>
#include <cmath>
#include <numbers>

#include "casimir/csv.hpp"
#include "casimir/error.hpp"
#include "casimir/geometry.hpp"

namespace casimir {
namespace {

constexpr double kTabulatedTolerance = 1e-6;

// Clamped-free eigenfunction in the scaled coordinate y = lambda z / L:
//   cosh y - cos y - sigma (sinh y - sin y),
//   sigma = (cosh lambda + cos lambda) / (sinh lambda + sin lambda).
// The hyperbolic pair is rewritten through exponentials so the large
// cancellation for higher modes never happens in floating point.
struct ClampedFree {
  double lambda;
  double sigma;
  double one_minus_sigma_scaled;  // (1 - sigma) e^lambda / 2

  explicit ClampedFree(double lam) : lambda(lam) {
    const double em = std::exp(-lam);
    const double denom = 1.0 - em * em + 2.0 * std::sin(lam) * em;
    sigma = (1.0 + em * em + 2.0 * std::cos(lam) * em) / denom;
    one_minus_sigma_scaled = (std::sin(lam) - std::cos(lam) - em) / denom;
  }

  double value(double y) const {
    const double hyper = one_minus_sigma_scaled * std::exp(y - lambda) +
                         0.5 * (1.0 + sigma) * std::exp(-y);
    return hyper - std::cos(y) + sigma * std::sin(y);
  }

  // d/dy of value.
  double slope(double y) const {
    const double hyper = one_minus_sigma_scaled * std::exp(y - lambda) -
                         0.5 * (1.0 + sigma) * std::exp(-y);
    return hyper + std::sin(y) + sigma * std::cos(y);
  }
};

}  // namespace

double ModeShape::clamped_free_root(int mode_index) {
  if (mode_index < 1) throw DomainError("ModeShape: mode index must be >= 1");
  // cos(x) + 1/cosh(x) changes sign once within 0.5 of (n - 1/2) pi.
  const double center = (mode_index - 0.5) * std::numbers::pi;
  auto f = [](double x) { return std::cos(x) + 1.0 / std::cosh(x); };
  double lo = center - 0.5;
  double hi = center + 0.5;
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ModeShape ModeShape::linear(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("ModeShape: length must be finite and > 0");
  }
  ModeShape m;
  m.kind_ = Kind::kLinear;
  m.length_ = length;
  return m;
}

ModeShape ModeShape::euler_bernoulli(int mode_index, double length) {
  ModeShape m = linear(length);
  m.kind_ = Kind::kEulerBernoulli;
  m.mode_index_ = mode_index;
  m.lambda_ = clamped_free_root(mode_index);
  m.tip_value_ = ClampedFree(m.lambda_).value(m.lambda_);
  return m;
}

ModeShape ModeShape::tabulated(std::vector<double> z, std::vector<double> phi) {
  if (z.size() != phi.size() || z.size() < 2) {
    throw DomainError("ModeShape: z and phi must have equal length >= 2");
  }
  if (z.front() != 0.0) throw DomainError("ModeShape: tabulated grid must start at z = 0");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z[i]) || !std::isfinite(phi[i])) {
      throw DomainError("ModeShape: non-finite sample at row " + std::to_string(i));
    }
    if (i > 0 && !(z[i] > z[i - 1])) {
      throw DomainError("ModeShape: z grid must be strictly increasing");
    }
  }
  if (std::abs(phi.front()) > kTabulatedTolerance) {
    throw DomainError("ModeShape: tabulated shape must satisfy phi(0) = 0");
  }
  if (std::abs(phi.back() - 1.0) > kTabulatedTolerance) {
    throw DomainError("ModeShape: tabulated shape must satisfy phi(L) = 1 within 1e-6");
  }
  ModeShape m;
  m.kind_ = Kind::kTabulated;
  m.length_ = z.back();
  m.z_ = std::move(z);
  m.phi_ = std::move(phi);
  return m;
}

ModeShape ModeShape::from_csv(const std::filesystem::path& path) {
  TwoColumnTable table = read_two_column_csv(path, "z", "phi");
  try {
    return tabulated(std::move(table.first), std::move(table.second));
  } catch (const DomainError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

double ModeShape::value(double z) const {
  switch (kind_) {
    case Kind::kLinear:
      return z / length_;
    case Kind::kEulerBernoulli:
      return ClampedFree(lambda_).value(lambda_ * z / length_) / tip_value_;
    case Kind::kTabulated: {
      auto it = std::upper_bound(z_.begin(), z_.end(), z);
      if (it == z_.begin()) return phi_.front();
      if (it == z_.end()) return phi_.back();
      const std::size_t i = static_cast<std::size_t>(it - z_.begin()) - 1;
      const double t = (z - z_[i]) / (z_[i + 1] - z_[i]);
      return phi_[i] + t * (phi_[i + 1] - phi_[i]);
    }
  }
  return 0.0;
}

double ModeShape::slope(double z) const {
  switch (kind_) {
    case Kind::kLinear:
      return 1.0 / length_;
    case Kind::kEulerBernoulli:
      return ClampedFree(lambda_).slope(lambda_ * z / length_) * lambda_ /
             (length_ * tip_value_);
    case Kind::kTabulated: {
      auto it = std::upper_bound(z_.begin(), z_.end(), z);
      std::size_t i = it == z_.begin() ? 0 : static_cast<std::size_t>(it - z_.begin()) - 1;
      if (i + 1 >= z_.size()) i = z_.size() - 2;
      return (phi_[i + 1] - phi_[i]) / (z_[i + 1] - z_[i]);
    }
  }
  return 0.0;
}

double mode_length(const ModeShape& shape, const QuadratureSettings& settings) {
  if (shape.is_linear()) return shape.length();
  double energy = 0.0;
  if (shape.is_tabulated()) {
    // Piecewise-linear samples: the slope is constant on every interval.
    const auto z = shape.samples_z();
    const auto phi = shape.samples_phi();
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
      const double dz = z[i + 1] - z[i];
      const double d = phi[i + 1] - phi[i];
      energy += d * d / dz;
    }
  } else {
    energy = integrate_adaptive(
        [&shape](double z) {
          const double d = shape.slope(z);
          return d * d;
        },
        0.0, shape.length(), settings);
  }
  if (!(energy > 0.0)) throw DomainError("mode_length: mode shape has zero slope energy");
  return 1.0 / energy;
}

}  // namespace casimir
