#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir {

/// Axis-aligned box in any dimension.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Solid ball in three dimensions.
struct Ball {
  std::array<double, 3> center{};
  double radius = 1.0;
};

/// Ball of the given radius whose lowest point sits `gap` above the plane
/// z = 0 (centre at z = gap + radius). Heights are importance-sampled with
/// density proportional to 1/z^2 so integrands concentrated near the gap
/// keep a finite, modest variance.
struct TipOverHalfSpace {
  double radius = 1.0;
  double gap = 1.0;
};

using Region = std::variant<Box, Ball, TipOverHalfSpace>;

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

template <std::size_t N>
struct McEstimateN {
  Values<N> estimate{};
  Values<N> std_error{};
};

/// Draws points from a region with their importance weights (weight =
/// 1/density, so the weighted mean estimates the integral).
class RegionSampler {
 public:
  /// Throws DomainError for degenerate or malformed regions.
  explicit RegionSampler(Region region);

  std::size_t dimension() const { return dimension_; }

  /// Fills `point` (size dimension()) and returns its weight.
  double sample(std::mt19937_64& rng, std::span<double> point) const;

 private:
  Region region_;
  std::size_t dimension_ = 3;
  double volume_ = 0.0;
};

/// Monte Carlo integral of a vector-valued integrand. Deterministic for a
/// fixed settings.seed.
template <std::size_t N, class F>
McEstimateN<N> integrate_mc_n(F&& f, const Region& region,
                              const QuadratureSettings& settings) {
  settings.validate();
  const RegionSampler sampler(region);
  std::mt19937_64 rng(settings.seed);
  std::vector<double> point(sampler.dimension());
  // Welford accumulation per component.
  Values<N> mean{};
  Values<N> m2{};
  for (std::size_t i = 0; i < settings.mc_samples; ++i) {
    const double weight = sampler.sample(rng, point);
    const Values<N> value = f(std::span<const double>(point));
    const double count = static_cast<double>(i + 1);
    for (std::size_t c = 0; c < N; ++c) {
      const double x = weight * value[c];
      const double delta = x - mean[c];
      mean[c] += delta / count;
      m2[c] += delta * (x - mean[c]);
    }
  }
  McEstimateN<N> out;
  const double n = static_cast<double>(settings.mc_samples);
  for (std::size_t c = 0; c < N; ++c) {
    out.estimate[c] = mean[c];
    out.std_error[c] = n > 1 ? std::sqrt(m2[c] / (n - 1.0) / n) : 0.0;
  }
  return out;
}

/// Scalar Monte Carlo integral with its standard error.
McEstimate integrate_mc(const std::function<double(std::span<const double>)>& f,
                        const Region& region, const QuadratureSettings& settings);

}  // namespace casimir
