#include "commands.hpp"

#include <cmath>

#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/csv.hpp"
#include "casimir/error.hpp"
#include "casimir/geometry.hpp"
#include "casimir/predict.hpp"
#include "casimir/simulate.hpp"
#include "run_config.hpp"
#include "verify.hpp"

namespace casimir::cli {
namespace {

using nlohmann::json;

// Signed zeros from the frame rotation carry no information.
double unsigned_zero(double x) { return x == 0.0 ? 0.0 : x; }

json vector_json(const Vector3& v) {
  return json::array({unsigned_zero(v.x()), unsigned_zero(v.y()), unsigned_zero(v.z())});
}

json matrix_json(const Matrix3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    rows.push_back(
        json::array({unsigned_zero(m(i, 0)), unsigned_zero(m(i, 1)), unsigned_zero(m(i, 2))}));
  }
  return rows;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int cmd_predict(const PredictArgs& args, std::ostream& out) {
  json doc;
  double noise = 0.0;
  double damping = 0.0;
  if (!args.transverse) {
    noise = casimir_noise_normal(args.delta_k);
    damping = casimir_damping_normal(args.delta_k, args.temperature);
    doc["geometry"] = "normal";
  } else {
    if (!args.mode_length || !args.gap) {
      throw ConfigError("predict transverse: --mode-length and --gap are required");
    }
    noise = casimir_noise_transverse(args.delta_k, *args.mode_length, *args.gap);
    damping = casimir_damping_transverse(args.delta_k, *args.mode_length, *args.gap,
                                         args.temperature);
    doc["geometry"] = "transverse";
    doc["mode_length"] = *args.mode_length;
    doc["gap"] = *args.gap;
  }
  doc["delta_k"] = args.delta_k;
  doc["temperature"] = args.temperature;
  doc["delta_Sf"] = noise;
  doc["sqrt_delta_Sf"] = std::sqrt(noise);
  doc["delta_damping"] = damping;
  emit(out, doc);
  return kSuccess;
}

int cmd_geometry(const GeometryArgs& args, std::ostream& out) {
  if (args.debye_frequency.has_value() == args.spectrum_csv.has_value()) {
    throw ConfigError("geometry: exactly one of --debye-frequency or --spectrum is required");
  }
  const TipSampleGeometry geom(args.radius, args.gap);
  auto dist = args.debye_frequency ? SpectralDistribution::debye(*args.debye_frequency)
                                   : SpectralDistribution::from_csv(*args.spectrum_csv);
  const MaterialSpec material(args.rho_a, args.rho_b, DipoleCoupling{args.kappa},
                              std::move(dist));

  const Vector3 force = total_force(geom, material);
  const Matrix3 spring = total_spring(geom, material);
  const Matrix3 noise = total_noise(geom, material);
  const Vector3 n = geom.normal;
  json doc = {{"radius", args.radius},
              {"gap", args.gap},
              {"force", vector_json(force)},
              {"spring", matrix_json(spring)},
              {"noise", matrix_json(noise)},
              {"force_geometric_factor", force_geometric_factor(args.radius, args.gap)},
              {"spring_geometric_factor", spring_geometric_factor(args.radius, args.gap)},
              {"noise_over_spring_over_hbar",
               n.dot(noise * n) / std::abs(n.dot(spring * n)) / kHbar}};

  int code = kSuccess;
  if (args.oracle) {
    QuadratureSettings s;
    s.mc_samples = args.samples;
    s.seed = args.seed;
    const auto mc = total_mc(geom, material, s);
    struct Row {
      const char* name;
      double closed;
      double estimate;
      double sigma;
    };
    // The surface normal is z here, so caller and local frames coincide.
    const Row rows[] = {
        {"force_normal", force.z(), mc.force.value.z(), mc.force.std_error.z()},
        {"spring_normal", spring(2, 2), mc.spring.value(2, 2), mc.spring.std_error(2, 2)},
        {"spring_transverse", spring(0, 0), mc.spring.value(0, 0),
         mc.spring.std_error(0, 0) + 1e-9 * std::abs(spring(2, 2)) / 3.0},
        {"noise_normal", noise(2, 2), mc.noise.value(2, 2), mc.noise.std_error(2, 2)},
        {"noise_transverse", noise(0, 0), mc.noise.value(0, 0), mc.noise.std_error(0, 0)},
    };
    json comparisons = json::array();
    for (const Row& r : rows) {
      const bool ok = std::abs(r.estimate - r.closed) <= 3.0 * r.sigma;
      if (!ok) code = kVerificationFailure;
      comparisons.push_back({{"name", r.name},
                             {"closed_form", r.closed},
                             {"monte_carlo", r.estimate},
                             {"std_error", r.sigma},
                             {"passed", ok}});
    }
    doc["oracle"] = {{"samples", args.samples}, {"seed", args.seed}, {"comparisons", comparisons}};
  }
  emit(out, doc);
  return code;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  const RunConfig config = load_run_config(args.config);
  if (!config.simulation) {
    throw ConfigError(args.config.string() + ": simulation section is required");
  }
  const SimulationConfig& sim = *config.simulation;
  const TimeSeries ts = simulate_brownian(sim);
  write_time_series_csv(args.out, ts);
  double mean = 0.0;
  for (double x : ts.samples) mean += x;
  mean /= static_cast<double>(ts.samples.size());
  double var = 0.0;
  for (double x : ts.samples) var += (x - mean) * (x - mean);
  var /= static_cast<double>(ts.samples.size());
  emit(out, {{"out", args.out.string()},
             {"samples", ts.samples.size()},
             {"dt", ts.dt},
             {"duration", ts.duration()},
             {"seed", sim.seed},
             {"sample_variance", var},
             {"expected_variance", simulated_variance(sim)}});
  return kSuccess;
}

int cmd_fit(const FitArgs& args, std::ostream& out) {
  if (args.series.has_value() == args.acf.has_value()) {
    throw ConfigError("fit: exactly one of --in or --acf is required");
  }
  std::optional<double> mass = args.mass;
  std::optional<double> temperature = args.temperature;
  if (args.config) {
    const RunConfig config = load_run_config(*args.config);
    if (config.cantilever) {
      if (!mass) mass = config.cantilever->mass;
      if (!temperature) temperature = config.cantilever->temperature;
    }
  }
  if (mass && !(*mass > 0.0)) throw ConfigError("fit: --mass must be > 0");
  if (temperature && !(*temperature >= 0.0)) throw ConfigError("fit: --temperature must be >= 0");

  Autocorrelation acf;
  json doc;
  if (args.series) {
    if (!args.max_lag) throw ConfigError("fit: --max-lag is required with --in");
    const TimeSeries ts = read_time_series_csv(*args.series);
    acf = estimate_autocorrelation(ts, *args.max_lag);
    doc["samples"] = ts.samples.size();
  } else {
    const auto table = read_two_column_csv(*args.acf, "tau", "acf");
    if (table.first.size() < 2) throw ConfigError(args.acf->string() + ": need at least two rows");
    acf.dt = table.first[1] - table.first[0];
    for (std::size_t i = 0; i < table.first.size(); ++i) {
      const double expected_tau = acf.dt * static_cast<double>(i);
      if (std::abs(table.first[i] - expected_tau) > 1e-9 * acf.dt * static_cast<double>(i + 1)) {
        throw ConfigError(args.acf->string() + ": tau must start at 0 and be uniformly spaced");
      }
    }
    acf.values = table.second;
  }
  const FitResult fit = fit_autocorrelation(acf, mass.value_or(1.0));
  doc["x2_mean"] = fit.x2_mean;
  doc["omega0_fit"] = fit.omega0_fit;
  doc["q_fit"] = fit.q_fit;
  doc["fit_residual"] = fit.fit_residual;
  // Force PSD and equipartition need the mass; the ratio also needs T.
  if (mass) {
    doc["mass"] = *mass;
    doc["sf_extracted"] = fit.sf_extracted;
    if (temperature && *temperature > 0.0) {
      const double k = *mass * fit.omega0_fit * fit.omega0_fit;
      doc["temperature"] = *temperature;
      doc["k_x2_over_kBT"] = k * fit.x2_mean / (kBoltzmann * *temperature);
    }
  }
  emit(out, doc);
  return kSuccess;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto checks = run_suite(args.suite, {args.fast, args.seed});
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    if (c.passed) ++passed;
  }
  emit(out, {{"suite", args.suite},
             {"fast", args.fast},
             {"seed", args.seed},
             {"checks", list},
             {"total", checks.size()},
             {"passed", passed},
             {"failed", checks.size() - passed}});
  return passed == checks.size() ? kSuccess : kVerificationFailure;
}

}  // namespace casimir::cli
