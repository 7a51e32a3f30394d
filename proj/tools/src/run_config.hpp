#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "casimir/geometry.hpp"
#include "casimir/predict.hpp"
#include "casimir/simulate.hpp"

namespace casimir::cli {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

// Seed from CASIMIR_SEED when set, otherwise the fallback.
std::uint64_t default_seed(std::uint64_t fallback = kDefaultSeed);

// One keyed document holding every run-level input. Sections are optional;
// commands check for the ones they need.
struct RunConfig {
  std::optional<CantileverParams> cantilever;
  std::optional<TipSampleGeometry> geometry;
  std::optional<MaterialSpec> material;
  std::optional<SimulationConfig> simulation;
};

// Relative paths inside the document resolve against base_dir.
RunConfig parse_run_config(const nlohmann::json& doc,
                           const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace casimir::cli
