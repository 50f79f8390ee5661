#pragma once

#include <string>
#include <vector>

#include "conflictgrid/scenario.hpp"

namespace conflictgrid::io {

// Input/output paths a scenario file may carry so a run is reproducible from
// the config alone. Command-line flags override these.
struct ScenarioPaths {
  std::string countries;
  std::string world;
  std::array<std::string, kResourceCount> layers;  // kAllResources order
  std::string out_prefix;
};

struct LoadedScenario {
  ScenarioConfig config;
  ScenarioPaths paths;
  // Alpha list for the sweep subcommand; the --alphas flag overrides it.
  std::vector<double> sweep_alphas;
  // One human-readable note per parameter the file left at its default.
  std::vector<std::string> defaulted;
};

// Parses a scenario JSON document. Unknown keys are rejected. Range checks
// happen later in validate_config, once the world is known.
LoadedScenario parse_scenario_json(const std::string& text, const std::string& file_name);

// Canonical JSON for a config, every parameter explicit.
std::string write_scenario_json(const ScenarioConfig& config);

}  // namespace conflictgrid::io
