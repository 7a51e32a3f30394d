#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include <fftw3.h>
#include <unsupported/Eigen/LevenbergMarquardt>

#include "casimir/error.hpp"
#include "casimir/simulate.hpp"

namespace casimir {
namespace {

// Owns an FFTW buffer.
template <class T>
struct FftwBuffer {
  T* data;
  explicit FftwBuffer(std::size_t n) : data(static_cast<T*>(fftw_malloc(sizeof(T) * n))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

struct FftwPlan {
  fftw_plan plan;
  explicit FftwPlan(fftw_plan p) : plan(p) {
    if (plan == nullptr) throw AccuracyError("FFTW plan creation failed");
  }
  ~FftwPlan() { fftw_destroy_plan(plan); }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
};

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Least-squares slope and intercept of y against x.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

// Residuals of the damped-cosine model in parameters scaled by their
// starting values: (A / c0, omega / omega_init, decay / decay_init).
struct AcfModel : Eigen::DenseFunctor<double> {
  const std::vector<double>* c;
  double dt;
  double c0;
  double omega_init;
  double decay_init;

  AcfModel(const std::vector<double>& values, std::size_t count, double dt_in, double c0_in,
           double omega_in, double decay_in)
      : Eigen::DenseFunctor<double>(3, static_cast<int>(count)),
        c(&values), dt(dt_in), c0(c0_in), omega_init(omega_in), decay_init(decay_in) {}

  int operator()(const InputType& p, ValueType& r) const {
    const double w = p[1] * omega_init;
    const double d = p[2] * decay_init;
    for (Eigen::Index j = 0; j < values(); ++j) {
      const double tau = dt * static_cast<double>(j);
      r[j] = p[0] * std::exp(-d * tau) * std::cos(w * tau) - (*c)[j] / c0;
    }
    return 0;
  }

  int df(const InputType& p, JacobianType& jac) const {
    const double w = p[1] * omega_init;
    const double d = p[2] * decay_init;
    for (Eigen::Index j = 0; j < values(); ++j) {
      const double tau = dt * static_cast<double>(j);
      const double e = std::exp(-d * tau);
      const double cs = std::cos(w * tau);
      jac(j, 0) = e * cs;
      jac(j, 1) = -p[0] * e * tau * std::sin(w * tau) * omega_init;
      jac(j, 2) = -p[0] * tau * e * cs * decay_init;
    }
    return 0;
  }
};

}  // namespace

Autocorrelation estimate_autocorrelation(const TimeSeries& ts, double max_lag) {
  const std::size_t n = ts.samples.size();
  if (n < 2 || !(ts.dt > 0.0)) throw DomainError("estimate_autocorrelation: empty series");
  if (!(max_lag >= 0.0) || max_lag > ts.duration() / 10.0) {
    throw DomainError("estimate_autocorrelation: max_lag must be <= duration / 10");
  }
  const auto lags = static_cast<std::size_t>(std::floor(max_lag / ts.dt)) + 1;
  const double mean = mean_of(ts.samples);

  // Block method: each block of length B is correlated against the 2B
  // samples that start with it, so lags below B never wrap around.
  const std::size_t block = next_pow2(lags);
  const std::size_t m = 2 * block;
  const std::size_t bins = m / 2 + 1;
  FftwBuffer<double> a(m);
  FftwBuffer<double> b(m);
  FftwBuffer<fftw_complex> fa(bins);
  FftwBuffer<fftw_complex> fb(bins);
  const FftwPlan plan_a(fftw_plan_dft_r2c_1d(static_cast<int>(m), a.data, fa.data, FFTW_ESTIMATE));
  const FftwPlan plan_b(fftw_plan_dft_r2c_1d(static_cast<int>(m), b.data, fb.data, FFTW_ESTIMATE));
  const FftwPlan plan_inv(
      fftw_plan_dft_c2r_1d(static_cast<int>(m), fa.data, a.data, FFTW_ESTIMATE));

  std::vector<double> acc(lags, 0.0);
  for (std::size_t start = 0; start < n; start += block) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t k = start + i;
      const double y = k < n ? ts.samples[k] - mean : 0.0;
      a.data[i] = i < block ? y : 0.0;
      b.data[i] = y;
    }
    fftw_execute(plan_a.plan);
    fftw_execute(plan_b.plan);
    for (std::size_t k = 0; k < bins; ++k) {
      const std::complex<double> za(fa.data[k][0], fa.data[k][1]);
      const std::complex<double> zb(fb.data[k][0], fb.data[k][1]);
      const std::complex<double> prod = std::conj(za) * zb;
      fa.data[k][0] = prod.real();
      fa.data[k][1] = prod.imag();
    }
    fftw_execute(plan_inv.plan);
    for (std::size_t j = 0; j < lags; ++j) acc[j] += a.data[j] / static_cast<double>(m);
  }
  Autocorrelation out;
  out.dt = ts.dt;
  out.values.resize(lags);
  for (std::size_t j = 0; j < lags; ++j) out.values[j] = acc[j] / static_cast<double>(n);
  return out;
}

PowerSpectrum estimate_power_spectrum(const TimeSeries& ts, std::size_t segment_length) {
  const std::size_t n = ts.samples.size();
  if (segment_length < 8 || segment_length > n) {
    throw DomainError("estimate_power_spectrum: segment length must be in [8, N]");
  }
  const double mean = mean_of(ts.samples);
  const std::size_t bins = segment_length / 2 + 1;
  std::vector<double> window(segment_length);
  double w2 = 0.0;
  for (std::size_t i = 0; i < segment_length; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                      static_cast<double>(segment_length));
    w2 += window[i] * window[i];
  }
  FftwBuffer<double> in(segment_length);
  FftwBuffer<fftw_complex> out(bins);
  const FftwPlan plan(fftw_plan_dft_r2c_1d(static_cast<int>(segment_length), in.data, out.data,
                                           FFTW_ESTIMATE));
  PowerSpectrum ps;
  ps.density.assign(bins, 0.0);
  std::size_t segments = 0;
  const std::size_t hop = segment_length / 2;
  for (std::size_t start = 0; start + segment_length <= n; start += hop) {
    for (std::size_t i = 0; i < segment_length; ++i) {
      in.data[i] = window[i] * (ts.samples[start + i] - mean);
    }
    fftw_execute(plan.plan);
    for (std::size_t k = 0; k < bins; ++k) {
      ps.density[k] += out.data[k][0] * out.data[k][0] + out.data[k][1] * out.data[k][1];
    }
    ++segments;
  }
  ps.omega.resize(bins);
  const double scale = ts.dt / (w2 * static_cast<double>(segments));
  for (std::size_t k = 0; k < bins; ++k) {
    ps.density[k] *= scale;
    ps.omega[k] = 2.0 * std::numbers::pi * static_cast<double>(k) /
                  (static_cast<double>(segment_length) * ts.dt);
  }
  return ps;
}

FitResult fit_autocorrelation(const Autocorrelation& acf, double mass) {
  const auto& c = acf.values;
  if (c.size() < 8 || !(acf.dt > 0.0)) throw DomainError("fit_autocorrelation: ACF too short");
  if (!(mass > 0.0)) throw DomainError("fit_autocorrelation: mass must be > 0");
  const double c0 = c[0];
  if (!(c0 > 0.0)) throw DomainError("fit_autocorrelation: C(0) must be > 0");

  // Zero crossings and half-cycle peaks while the envelope is well above
  // the estimator noise.
  std::vector<double> crossings;
  std::vector<double> peak_t;
  std::vector<double> peak_log;
  double peak = 0.0;
  std::size_t peak_at = 0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (std::abs(c[j - 1]) > peak) {
      peak = std::abs(c[j - 1]);
      peak_at = j - 1;
    }
    if ((c[j - 1] > 0.0) != (c[j] > 0.0)) {
      if (peak < 0.1 * c0) break;
      const double frac = c[j - 1] / (c[j - 1] - c[j]);
      crossings.push_back(acf.dt * (static_cast<double>(j - 1) + frac));
      peak_t.push_back(acf.lag(peak_at));
      peak_log.push_back(std::log(peak));
      peak = 0.0;
    }
  }
  if (crossings.size() < 4) {
    throw AccuracyError("fit_autocorrelation: too few zero crossings to initialize the fit");
  }
  std::vector<double> index(crossings.size());
  std::iota(index.begin(), index.end(), 0.0);
  const double omega_init = std::numbers::pi / linear_fit(index, crossings).first;
  const double span = acf.lag(c.size() - 1);
  if (span * omega_init / (2.0 * std::numbers::pi) < 20.0) {
    throw DomainError("fit_autocorrelation: ACF must cover at least 20 oscillation periods");
  }
  // The first half-cycle peak is C(0) itself; regress the rest.
  double decay_init = -linear_fit(peak_t, peak_log).first;
  if (!(decay_init > 0.0)) decay_init = omega_init / (2.0 * 1e3);

  const double window = 5.0 / decay_init;
  const auto count = std::min(c.size(), static_cast<std::size_t>(window / acf.dt) + 1);
  if (count < 4) throw AccuracyError("fit_autocorrelation: fit window too short");

  AcfModel model(c, count, acf.dt, c0, omega_init, decay_init);
  Eigen::LevenbergMarquardt<AcfModel> lm(model);
  lm.setXtol(1e-15);
  lm.setFtol(1e-15);
  lm.setGtol(0.0);
  lm.setMaxfev(4000);
  Eigen::VectorXd p(3);
  p << 1.0, 1.0, 1.0;
  const auto status = lm.minimize(p);
  using Eigen::LevenbergMarquardtSpace::Status;
  if (status == Status::ImproperInputParameters || status == Status::TooManyFunctionEvaluation ||
      !p.allFinite()) {
    throw AccuracyError("fit_autocorrelation: Levenberg-Marquardt did not converge");
  }

  FitResult fit;
  fit.x2_mean = p[0] * c0;
  fit.omega0_fit = p[1] * omega_init;
  const double decay = p[2] * decay_init;
  if (!(decay > 0.0) || !(fit.x2_mean > 0.0) || !(fit.omega0_fit > 0.0)) {
    throw AccuracyError("fit_autocorrelation: fitted Q or amplitude is not positive");
  }
  fit.q_fit = fit.omega0_fit / (2.0 * decay);
  Eigen::VectorXd r(static_cast<Eigen::Index>(count));
  model(p, r);
  fit.fit_residual = std::sqrt(r.squaredNorm() / static_cast<double>(count)) / p[0];
  fit.sf_extracted = extract_force_psd(fit, mass);
  return fit;
}

double extract_force_psd(const FitResult& fit, double mass) {
  const double k = mass * fit.omega0_fit * fit.omega0_fit;
  return 2.0 * k * k / (fit.q_fit * fit.omega0_fit) * fit.x2_mean;
}

}  // namespace casimir
