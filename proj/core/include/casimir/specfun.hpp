#pragma once

#include <complex>

#include "casimir/constants.hpp"
#include "casimir/montecarlo.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

using ComplexValue = std::complex<double>;

/// e^w E1(w), principal branch (cut on the negative real axis). The scaling
/// keeps the value finite where E1 itself over- or underflows.
ComplexValue expint_e1_scaled(ComplexValue w);

/// Sine and cosine integrals Si(x), Ci(x) for real x > 0 (Si also accepts 0).
double sine_integral(double x);
double cosine_integral(double x);

/// g(z) = integral over t in [0, inf) of cos(t)/(t + z).
///
/// Real z uses -Ci(z) cos(z) + (pi/2 - Si(z)) sin(z); complex z uses the
/// continuation (e^{-iz} E1(-iz) + e^{iz} E1(iz))/2. Throws DomainError for
/// z = 0 or z on the negative real axis, AccuracyError if the series or
/// continued fraction fails to converge.
ComplexValue expint_g(ComplexValue z);

/// Direct quadrature of the oscillatory integral defining g(z). Oracle for
/// expint_g; much slower.
ComplexValue expint_g_quadrature(ComplexValue z, const QuadratureSettings& settings);

/// hbar omega coth(hbar omega / (2 k_B T)) in joules; even in omega, with the
/// limits 2 k_B T (omega -> 0) and hbar |omega| (T -> 0) taken exactly.
double thermal_kernel(double omega, double temperature);

}  // namespace casimir
