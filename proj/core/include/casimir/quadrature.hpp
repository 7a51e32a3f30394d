#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "casimir/error.hpp"

namespace casimir {

/// Tolerances and sample counts shared by the quadrature and Monte Carlo
/// engines.
struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_subdivisions = 4000;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 20261016;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

template <std::size_t N>
using Values = std::array<double, N>;

namespace detail {

// 21-point Gauss-Kronrod abscissae and weights (QUADPACK qk21).
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980914941, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7, 9).
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t N>
double max_norm(const Values<N>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
struct Panel {
  double a;
  double b;
  Values<N> value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <std::size_t N, class F>
Panel<N> kronrod21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Values<N> kronrod{};
  Values<N> gauss{};
  const Values<N> fc = f(center);
  for (std::size_t c = 0; c < N; ++c) kronrod[c] = fc[c] * kWgk[10];
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const Values<N> f1 = f(center - dx);
    const Values<N> f2 = f(center + dx);
    for (std::size_t c = 0; c < N; ++c) {
      const double sum = f1[c] + f2[c];
      kronrod[c] += kWgk[j] * sum;
      if (j % 2 == 1) gauss[c] += kWg[j / 2] * sum;
    }
  }
  Panel<N> panel{a, b, {}, 0.0};
  double err = 0.0;
  for (std::size_t c = 0; c < N; ++c) {
    panel.value[c] = kronrod[c] * half;
    err = std::max(err, std::abs((kronrod[c] - gauss[c]) * half));
  }
  panel.error = err;
  return panel;
}

template <std::size_t N, class F>
Values<N> adaptive_finite(F& f, std::span<const double> edges,
                          const QuadratureSettings& settings) {
  std::priority_queue<Panel<N>> queue;
  Values<N> total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] == edges[i]) continue;
    Panel<N> p = kronrod21<N>(f, edges[i], edges[i + 1]);
    for (std::size_t c = 0; c < N; ++c) total[c] += p.value[c];
    total_error += p.error;
    queue.push(p);
  }
  int splits = 0;
  while (!queue.empty()) {
    const double target =
        std::max(settings.abs_tol, settings.rel_tol * max_norm<N>(total));
    if (total_error <= target) return total;
    if (splits >= settings.max_subdivisions) {
      throw AccuracyError("integrate_adaptive: no convergence after " +
                          std::to_string(splits) + " subdivisions (error " +
                          std::to_string(total_error) + ", target " +
                          std::to_string(target) + ")");
    }
    Panel<N> worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw AccuracyError("integrate_adaptive: interval collapsed at x = " +
                          std::to_string(worst.a));
    }
    Panel<N> left = kronrod21<N>(f, worst.a, mid);
    Panel<N> right = kronrod21<N>(f, mid, worst.b);
    for (std::size_t c = 0; c < N; ++c) {
      total[c] += left.value[c] + right.value[c] - worst.value[c];
    }
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  return total;
}

}  // namespace detail

/// Adaptive 21-point Gauss-Kronrod quadrature of a vector-valued integrand
/// over [a, b]; b may be +infinity. Interior breakpoints (sorted, inside
/// (a, b)) seed the initial partition. The error norm is the max over
/// components.
template <std::size_t N, class F>
Values<N> integrate_adaptive_n(F&& f, double a, double b,
                               const QuadratureSettings& settings,
                               std::span<const double> breakpoints = {}) {
  settings.validate();
  if (!(a <= b)) throw DomainError("integrate_adaptive: requires a <= b");
  if (!std::isfinite(a)) throw DomainError("integrate_adaptive: a must be finite");
  std::vector<double> edges;
  edges.push_back(a);
  for (double p : breakpoints) {
    if (p > edges.back() && p < b) edges.push_back(p);
  }
  if (std::isfinite(b)) {
    edges.push_back(b);
    return detail::adaptive_finite<N>(f, edges, settings);
  }
  // [a, inf) mapped onto [0, 1) through x = a + scale t/(1-t); the scale is
  // the span of the breakpoints so features keep their resolution.
  const double scale = edges.size() > 1 ? edges.back() - a : std::max(1.0, std::abs(a));
  std::vector<double> mapped_edges;
  for (double x : edges) mapped_edges.push_back((x - a) / (scale + (x - a)));
  mapped_edges.push_back(1.0);
  auto mapped = [&f, a, scale](double t) {
    const double one_minus = 1.0 - t;
    Values<N> v = f(a + scale * t / one_minus);
    const double jac = scale / (one_minus * one_minus);
    for (double& x : v) x *= jac;
    return v;
  };
  return detail::adaptive_finite<N>(mapped, mapped_edges, settings);
}

/// Scalar adaptive Gauss-Kronrod quadrature; b may be +infinity.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSettings& settings,
                          std::span<const double> breakpoints = {});

/// Integral of h(t) cos(omega t) over [a, inf). The range is cut at the
/// zeros of the cosine, each half-period is integrated adaptively, and the
/// alternating partial sums are accelerated with Wynn's epsilon algorithm.
double integrate_fourier_cos(const std::function<double(double)>& h, double a,
                             double omega, const QuadratureSettings& settings,
                             std::span<const double> breakpoints = {});

/// Limit of a sequence of partial sums by Wynn's epsilon algorithm.
double wynn_epsilon(std::span<const double> partial_sums);

}  // namespace casimir
