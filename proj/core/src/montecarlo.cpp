#include "casimir/montecarlo.hpp"

#include <numbers>
#include <string>

#include "casimir/error.hpp"

namespace casimir {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

RegionSampler::RegionSampler(Region region) : region_(std::move(region)) {
  if (const auto* box = std::get_if<Box>(&region_)) {
    if (box->lower.empty() || box->lower.size() != box->upper.size()) {
      throw DomainError("integrate_mc: box bounds must be non-empty and equal length");
    }
    dimension_ = box->lower.size();
    volume_ = 1.0;
    for (std::size_t i = 0; i < dimension_; ++i) {
      const double width = box->upper[i] - box->lower[i];
      if (!(width > 0.0) || !std::isfinite(width)) {
        throw DomainError("integrate_mc: box axis " + std::to_string(i) +
                          " has non-positive width");
      }
      volume_ *= width;
    }
  } else if (const auto* ball = std::get_if<Ball>(&region_)) {
    if (!(ball->radius > 0.0)) throw DomainError("integrate_mc: ball radius must be > 0");
    volume_ = 4.0 / 3.0 * std::numbers::pi * std::pow(ball->radius, 3);
  } else {
    const auto& tip = std::get<TipOverHalfSpace>(region_);
    if (!(tip.radius > 0.0)) throw DomainError("integrate_mc: tip radius must be > 0");
    if (!(tip.gap > 0.0)) throw DomainError("integrate_mc: gap must be > 0 (degenerate region)");
  }
}

double RegionSampler::sample(std::mt19937_64& rng, std::span<double> point) const {
  if (const auto* box = std::get_if<Box>(&region_)) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      point[i] = box->lower[i] + (box->upper[i] - box->lower[i]) * uniform01(rng);
    }
    return volume_;
  }
  if (const auto* ball = std::get_if<Ball>(&region_)) {
    double x, y, z;
    do {
      x = 2.0 * uniform01(rng) - 1.0;
      y = 2.0 * uniform01(rng) - 1.0;
      z = 2.0 * uniform01(rng) - 1.0;
    } while (x * x + y * y + z * z > 1.0);
    point[0] = ball->center[0] + ball->radius * x;
    point[1] = ball->center[1] + ball->radius * y;
    point[2] = ball->center[2] + ball->radius * z;
    return volume_;
  }
  const auto& tip = std::get<TipOverHalfSpace>(region_);
  const double r = tip.radius;
  const double h = tip.gap;
  // Height z in [h, h + 2r] with density g(z) = z^-2 / norm.
  const double inv_lo = 1.0 / h;
  const double inv_hi = 1.0 / (h + 2.0 * r);
  const double norm = inv_lo - inv_hi;
  const double z = 1.0 / (inv_lo - uniform01(rng) * norm);
  const double offset = z - h - r;
  const double disk_r2 = std::max(r * r - offset * offset, 0.0);
  const double rho = std::sqrt(disk_r2 * uniform01(rng));
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  point[0] = rho * std::cos(phi);
  point[1] = rho * std::sin(phi);
  point[2] = z;
  const double density = 1.0 / (z * z * norm);
  return std::numbers::pi * disk_r2 / density;
}

McEstimate integrate_mc(const std::function<double(std::span<const double>)>& f,
                        const Region& region, const QuadratureSettings& settings) {
  auto wrapped = [&f](std::span<const double> p) { return Values<1>{f(p)}; };
  const auto result = integrate_mc_n<1>(wrapped, region, settings);
  return {result.estimate[0], result.std_error[0]};
}

}  // namespace casimir
