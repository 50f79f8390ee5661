#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "conflictgrid/classify.hpp"
#include "conflictgrid/layers.hpp"
#include "conflictgrid/quantize.hpp"
#include "conflictgrid/world.hpp"

namespace conflictgrid {

inline constexpr double kDefaultAlpha = 0.5;
inline constexpr int kDefaultTopK = 10;

// One (country, resource) override of a scenario parameter. Pinned entries
// survive alpha sweeps; unpinned ones are replaced by the swept value.
struct PairOverride {
  std::string country;
  ResourceKind resource = ResourceKind::Oil;
  double value = 0.0;
  bool pinned = false;

  friend bool operator==(const PairOverride&, const PairOverride&) = default;
};

// A per-(country, resource) parameter: a fallback plus sparse overrides.
struct PairParam {
  double fallback = 0.0;
  std::vector<PairOverride> overrides;

  double value_for(const std::string& country, ResourceKind resource) const;

  friend bool operator==(const PairParam&, const PairParam&) = default;
};

// Every model parameter of one scenario. All fields have working defaults;
// the config loader reports which ones a file left defaulted.
struct ScenarioConfig {
  int grade_count = kDefaultGradeCount;
  QuantizeMode quantize_mode = QuantizeMode::Linear;
  PairParam alpha{kDefaultAlpha, {}};
  PairParam decay_km{kDefaultDecayKm, {}};
  double maritime_base = 1.0;
  std::unordered_map<std::string, double> importance;  // non-Arctic code -> (0, 1]
  std::array<double, kResourceCount> step1_weights{1.0, 1.0, 1.0, 1.0};
  std::array<double, kResourceCount> step2_weights{1.0, 1.0, 1.0, 1.0};
  // Thresholds for the overall classification. The per-resource step always
  // cuts into grade_count quantile classes so forecasts stay on the grade
  // scale.
  ThresholdScheme scheme = ThresholdScheme{};
  int top_k = kDefaultTopK;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Full parameter validation against a world: ranges, positivity, declared
// override countries, importance present for every non-Arctic country.
// Throws ValidationError.
void validate_config(const ScenarioConfig& config, const World& world);

// Sweep helper: sets the fallback alpha for every (country, resource) pair,
// dropping unpinned overrides and keeping pinned ones.
ScenarioConfig with_uniform_alpha(ScenarioConfig config, double alpha);

}  // namespace conflictgrid
