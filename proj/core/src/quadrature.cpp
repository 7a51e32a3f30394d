#include "casimir/quadrature.hpp"

#include <numbers>

namespace casimir {

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSettings: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadratureSettings: abs_tol must be >= 0");
  if (max_subdivisions < 1) {
    throw DomainError("QuadratureSettings: max_subdivisions must be >= 1");
  }
  if (mc_samples < 1) throw DomainError("QuadratureSettings: mc_samples must be >= 1");
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSettings& settings,
                          std::span<const double> breakpoints) {
  auto wrapped = [&f](double x) { return Values<1>{f(x)}; };
  return integrate_adaptive_n<1>(wrapped, a, b, settings, breakpoints)[0];
}

double wynn_epsilon(std::span<const double> partial_sums) {
  const std::size_t n = partial_sums.size();
  if (n == 0) return 0.0;
  if (n < 3) return partial_sums.back();
  // Column-by-column evaluation; prev holds eps_{k-1}, cur holds eps_k.
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> cur(partial_sums.begin(), partial_sums.end());
  double best = partial_sums.back();
  for (std::size_t k = 1; cur.size() > 1; ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return (k - 1) % 2 == 0 ? cur[i + 1] : best;
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0 && !cur.empty() && std::isfinite(cur.back())) best = cur.back();
  }
  return best;
}

double integrate_fourier_cos(const std::function<double(double)>& h, double a,
                             double omega, const QuadratureSettings& settings,
                             std::span<const double> breakpoints) {
  settings.validate();
  if (omega < 0.0) omega = -omega;
  if (omega == 0.0) {
    return integrate_adaptive(h, a, std::numeric_limits<double>::infinity(),
                              settings, breakpoints);
  }
  const double half_period = std::numbers::pi / omega;
  auto integrand = [&h, omega](double t) { return h(t) * std::cos(omega * t); };

  // Chunk k covers [t_k, t_{k+1}] between successive zeros of cos(omega t).
  double k0 = std::ceil(a / half_period - 0.5);
  double left = a;
  QuadratureSettings chunk = settings;
  chunk.rel_tol = std::min(settings.rel_tol * 1e-2, 1e-12);
  chunk.abs_tol = 0.0;

  std::vector<double> sums;
  double running = 0.0;
  double last_estimate = std::numeric_limits<double>::quiet_NaN();
  int stable = 0;
  constexpr std::size_t kWindow = 40;
  for (int k = 0; k < settings.max_subdivisions; ++k) {
    double right = (k0 + 0.5 + k) * half_period;
    if (right <= left) continue;
    std::vector<double> inner;
    for (double p : breakpoints) {
      if (p > left && p < right) inner.push_back(p);
    }
    // Absolute floor keeps far-tail chunks from chasing roundoff.
    chunk.abs_tol = std::abs(running) * 1e-3 * settings.rel_tol;
    running += integrate_adaptive(integrand, left, right, chunk, inner);
    sums.push_back(running);
    left = right;

    const bool past_breakpoints =
        breakpoints.empty() || left > breakpoints.back();
    if (sums.size() < 8 || !past_breakpoints) continue;
    const std::size_t start = sums.size() > kWindow ? sums.size() - kWindow : 0;
    const double estimate =
        wynn_epsilon(std::span<const double>(sums).subspan(start));
    const double target = std::max(settings.abs_tol,
                                   settings.rel_tol * std::abs(estimate));
    if (std::isfinite(last_estimate) && std::abs(estimate - last_estimate) <= target) {
      if (++stable >= 3) return estimate;
    } else {
      stable = 0;
    }
    last_estimate = estimate;
  }
  throw AccuracyError("integrate_fourier_cos: partial sums did not converge");
}

}  // namespace casimir
