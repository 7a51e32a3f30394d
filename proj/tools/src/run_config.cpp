#include "run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <string>

#include "casimir/error.hpp"

namespace casimir::cli {
namespace {

using nlohmann::json;

class Section {
 public:
  Section(const json& doc, std::string path, std::set<std::string> allowed)
      : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) fail("", "must be an object");
    for (const auto& [key, value] : doc_.items()) {
      if (!allowed.contains(key)) fail(key, "unknown key");
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const std::string where = key.empty() ? path_ : path_ + "." + key;
    throw ConfigError(where + ": " + what);
  }

  bool has(const std::string& key) const { return doc_.contains(key); }

  std::optional<double> number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = doc_.at(key);
    if (!v.is_number()) fail(key, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "must be finite");
    return x;
  }

  double required(const std::string& key) const {
    const auto x = number(key);
    if (!x) fail(key, "is required");
    return *x;
  }

  double positive(const std::string& key) const {
    const double x = required(key);
    if (!(x > 0.0)) fail(key, "must be > 0");
    return x;
  }

  double non_negative(const std::string& key, double fallback) const {
    const double x = number(key).value_or(fallback);
    if (!(x >= 0.0)) fail(key, "must be >= 0");
    return x;
  }

  std::optional<std::string> string(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = doc_.at(key);
    if (!v.is_string()) fail(key, "must be a string");
    return v.get<std::string>();
  }

  const json& raw(const std::string& key) const { return doc_.at(key); }
  const std::string& path() const { return path_; }

 private:
  const json& doc_;
  std::string path_;
};

CantileverParams parse_cantilever(const json& doc) {
  const Section s(doc, "cantilever", {"mass", "spring", "omega0", "q", "temperature"});
  if (s.has("mass") == s.has("spring")) s.fail("", "exactly one of mass or spring is required");
  const double omega0 = s.positive("omega0");
  const double q = s.positive("q");
  if (!s.has("temperature")) s.fail("temperature", "is required");
  const double temperature = s.non_negative("temperature", 0.0);
  if (s.has("mass")) return CantileverParams(s.positive("mass"), omega0, q, temperature);
  return CantileverParams::from_spring(s.positive("spring"), omega0, q, temperature);
}

TipSampleGeometry parse_geometry(const json& doc) {
  const Section s(doc, "geometry", {"radius", "gap", "normal"});
  const double radius = s.positive("radius");
  const double gap = s.positive("gap");
  Vector3 normal = Vector3::UnitZ();
  if (s.has("normal")) {
    const auto& n = s.raw("normal");
    if (!n.is_array() || n.size() != 3) s.fail("normal", "must be an array of 3 numbers");
    for (int i = 0; i < 3; ++i) {
      if (!n[static_cast<std::size_t>(i)].is_number()) {
        s.fail("normal[" + std::to_string(i) + "]", "must be a number");
      }
      normal[i] = n[static_cast<std::size_t>(i)].get<double>();
    }
  }
  try {
    return TipSampleGeometry(radius, gap, normal);
  } catch (const DomainError& e) {
    s.fail("", e.what());
  }
}

MaterialSpec parse_material(const json& doc, const std::filesystem::path& base_dir) {
  const Section s(doc, "material",
                  {"rho_a", "rho_b", "kappa", "debye_frequency", "spectrum_csv"});
  const double rho_a = s.positive("rho_a");
  const double rho_b = s.positive("rho_b");
  const double kappa = s.required("kappa");
  if (s.has("debye_frequency") == s.has("spectrum_csv")) {
    s.fail("", "exactly one of debye_frequency or spectrum_csv is required");
  }
  auto dist = [&] {
    if (s.has("debye_frequency")) return SpectralDistribution::debye(s.positive("debye_frequency"));
    std::filesystem::path csv = *s.string("spectrum_csv");
    if (csv.is_relative()) csv = base_dir / csv;
    try {
      return SpectralDistribution::from_csv(csv);
    } catch (const ConfigError& e) {
      s.fail("spectrum_csv", e.what());
    }
  }();
  try {
    return MaterialSpec(rho_a, rho_b, DipoleCoupling{kappa}, std::move(dist));
  } catch (const DomainError& e) {
    s.fail("", e.what());
  }
}

SimulationConfig parse_simulation(const json& doc, const CantileverParams& params) {
  const Section s(doc, "simulation",
                  {"dt", "duration", "ring_downs", "seed", "extra_force_psd", "extra_damping"});
  SimulationConfig config;
  config.params = params;
  config.dt = s.has("dt") ? s.positive("dt")
                          : 2.0 * std::numbers::pi / params.omega0 / 25.0;
  if (s.has("duration") == s.has("ring_downs")) {
    s.fail("", "exactly one of duration or ring_downs is required");
  }
  config.duration = s.has("duration") ? s.positive("duration")
                                      : s.positive("ring_downs") * config.ring_down_time();
  config.seed = default_seed();
  if (s.has("seed")) {
    const auto& v = s.raw("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      s.fail("seed", "must be a non-negative integer");
    }
    config.seed = v.get<std::uint64_t>();
  }
  config.extra_force_psd = s.non_negative("extra_force_psd", 0.0);
  config.extra_damping = s.non_negative("extra_damping", 0.0);
  try {
    config.validate();
  } catch (const DomainError& e) {
    // Already prefixed with the section name.
    throw ConfigError(e.what());
  }
  return config;
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("CASIMIR_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const auto value = std::strtoull(env, &end, 10);
  if (*end != '\0') throw ConfigError("CASIMIR_SEED: not an unsigned integer: " + std::string(env));
  return value;
}

RunConfig parse_run_config(const json& doc, const std::filesystem::path& base_dir) {
  const Section top(doc, "config", {"cantilever", "geometry", "material", "simulation"});
  RunConfig config;
  if (top.has("cantilever")) config.cantilever = parse_cantilever(doc.at("cantilever"));
  if (top.has("geometry")) config.geometry = parse_geometry(doc.at("geometry"));
  if (top.has("material")) config.material = parse_material(doc.at("material"), base_dir);
  if (top.has("simulation")) {
    if (!config.cantilever) throw ConfigError("simulation: requires a cantilever section");
    config.simulation = parse_simulation(doc.at("simulation"), *config.cantilever);
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  try {
    return parse_run_config(doc, path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace casimir::cli
