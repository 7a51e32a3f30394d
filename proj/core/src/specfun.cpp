#include "casimir/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "casimir/error.hpp"

namespace casimir {
namespace {

constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Power series E1(w) = -gamma - ln w - sum_{k>=1} (-w)^k / (k k!).
ComplexValue e1_series(ComplexValue w) {
  ComplexValue sum = 0.0;
  ComplexValue term = 1.0;
  for (int k = 1; k < 1000; ++k) {
    term *= -w / static_cast<double>(k);
    const ComplexValue add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= kEps * std::abs(sum)) {
      return -kEulerGamma - std::log(w) - sum;
    }
  }
  throw AccuracyError("expint_e1: power series did not converge");
}

// Continued fraction for e^w E1(w) (modified Lentz).
ComplexValue e1_scaled_fraction(ComplexValue w) {
  constexpr double kTiny = 1e-300;
  ComplexValue b = w + 1.0;
  ComplexValue c = 1.0 / kTiny;
  ComplexValue d = 1.0 / b;
  ComplexValue h = d;
  for (int i = 1; i < 20000; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const ComplexValue delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) return h;
  }
  throw AccuracyError("expint_e1: continued fraction did not converge");
}

bool use_series(ComplexValue w) {
  const double r = std::abs(w);
  if (r < 4.0) return true;
  // Near the negative real axis the series has no cancellation while the
  // continued fraction converges slowly.
  return w.real() < 0.0 && std::abs(w.imag()) < -w.real() && r < 40.0;
}

}  // namespace

ComplexValue expint_e1_scaled(ComplexValue w) {
  if (w == ComplexValue(0.0, 0.0)) throw DomainError("expint_e1: singular at w = 0");
  if (w.imag() == 0.0 && w.real() < 0.0) {
    throw DomainError("expint_e1: w on the branch cut (negative real axis)");
  }
  if (use_series(w)) return std::exp(w) * e1_series(w);
  return e1_scaled_fraction(w);
}

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x == 0.0) return 0.0;
  // E1(ix) = -Ci(x) + i (Si(x) - pi/2).
  const ComplexValue w(0.0, x);
  const ComplexValue e1 = std::exp(-w) * expint_e1_scaled(w);
  return e1.imag() + std::numbers::pi / 2.0;
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw DomainError("cosine_integral: requires x > 0");
  const ComplexValue w(0.0, x);
  const ComplexValue e1 = std::exp(-w) * expint_e1_scaled(w);
  return -e1.real();
}

ComplexValue expint_g(ComplexValue z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("expint_g: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw DomainError("expint_g: z on the branch cut (z <= 0 real)");
  }
  if (z.imag() == 0.0) {
    const double x = z.real();
    const double ci = cosine_integral(x);
    const double si = sine_integral(x);
    return {-ci * std::cos(x) + (std::numbers::pi / 2.0 - si) * std::sin(x), 0.0};
  }
  const ComplexValue i(0.0, 1.0);
  // e^{-iz} E1(-iz) and e^{iz} E1(iz) are both scaled exponential integrals.
  return 0.5 * (expint_e1_scaled(-i * z) + expint_e1_scaled(i * z));
}

ComplexValue expint_g_quadrature(ComplexValue z, const QuadratureSettings& settings) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw DomainError("expint_g_quadrature: z on the branch cut");
  }
  const double x = z.real();
  const double y = z.imag();
  const double r = std::abs(z);
  auto re = [x, y](double t) {
    const double u = t + x;
    return u / (u * u + y * y);
  };
  auto im = [x, y](double t) {
    const double u = t + x;
    return -y / (u * u + y * y);
  };
  std::vector<double> breaks;
  for (double p : {0.1 * r, r, 10.0 * r}) {
    if (p > 0.0 && p < 50.0) breaks.push_back(p);
  }
  const double real_part = integrate_fourier_cos(re, 0.0, 1.0, settings, breaks);
  const double imag_part =
      y == 0.0 ? 0.0 : integrate_fourier_cos(im, 0.0, 1.0, settings, breaks);
  return {real_part, imag_part};
}

double thermal_kernel(double omega, double temperature) {
  if (!(temperature >= 0.0)) throw DomainError("thermal_kernel: temperature must be >= 0");
  const double energy = kHbar * std::abs(omega);
  if (temperature == 0.0) return energy;
  const double thermal = 2.0 * kBoltzmann * temperature;
  const double x = energy / thermal;
  if (x == 0.0) return thermal;
  if (x < 1e-4) {
    // x coth x = 1 + x^2/3 - x^4/45.
    const double x2 = x * x;
    return thermal * (1.0 + x2 / 3.0 - x2 * x2 / 45.0);
  }
  if (x > 40.0) return energy;
  return energy / std::tanh(x);
}

}  // namespace casimir
