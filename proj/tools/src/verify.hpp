#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace casimir::cli {

enum class Gate { kRelative, kAbsolute, kSigma };

struct Check {
  std::string name;
  double expected = 0.0;
  double got = 0.0;
  // Relative gates scale by |expected|; absolute and sigma gates do not.
  double tolerance = 0.0;
  Gate gate = Gate::kRelative;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  bool fast = false;
  std::uint64_t seed = 20261016;
};

const std::vector<std::string>& suite_names();

// Throws ConfigError for an unknown suite. "all" runs every suite.
std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options);

nlohmann::json to_json(const Check& check);

}  // namespace casimir::cli
