#include "conflictgrid/scenario.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

double PairParam::value_for(const std::string& country, ResourceKind resource) const {
  for (const PairOverride& o : overrides) {
    if (o.country == country && o.resource == resource) return o.value;
  }
  return fallback;
}

namespace {

void validate_pair_param(const PairParam& param, const World& world, const char* name,
                         double lo, double hi, bool lo_exclusive) {
  auto in_range = [&](double v) {
    if (!std::isfinite(v)) return false;
    if (lo_exclusive ? !(v > lo) : !(v >= lo)) return false;
    return v <= hi;
  };
  if (!in_range(param.fallback)) {
    throw ValidationError(std::string(name) + " default out of range");
  }
  std::set<std::pair<std::string, ResourceKind>> seen;
  for (const PairOverride& o : param.overrides) {
    if (world.country_index(o.country) < 0) {
      throw ValidationError(std::string(name) + " override names undeclared country '" +
                            o.country + "'");
    }
    if (!seen.insert({o.country, o.resource}).second) {
      throw ValidationError(std::string(name) + " has duplicate override for (" + o.country +
                            ", " + resource_name(o.resource) + ")");
    }
    if (!in_range(o.value)) {
      throw ValidationError(std::string(name) + " override for (" + o.country + ", " +
                            resource_name(o.resource) + ") out of range");
    }
  }
}

}  // namespace

void validate_config(const ScenarioConfig& config, const World& world) {
  if (config.grade_count < 2) {
    throw ValidationError("grade_count must be at least 2, got " +
                          std::to_string(config.grade_count));
  }
  validate_pair_param(config.alpha, world, "alpha", 0.0, 1.0, false);
  validate_pair_param(config.decay_km, world, "decay_km", 0.0,
                      std::numeric_limits<double>::max(), true);
  if (!(config.maritime_base > 0.0)) {
    throw ValidationError("maritime base_utility must be positive");
  }
  for (const auto& [code, value] : config.importance) {
    const int idx = world.country_index(code);
    if (idx < 0) {
      throw ValidationError("importance names undeclared country '" + code + "'");
    }
    if (!(value > 0.0 && value <= 1.0)) {
      throw ValidationError("importance for '" + code + "' must lie in (0, 1]");
    }
  }
  for (const Country& c : world.countries()) {
    if (c.kind == CountryKind::NonArctic && !config.importance.count(c.code)) {
      throw ValidationError("missing maritime importance for non-Arctic country '" + c.code +
                            "'");
    }
  }
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    if (!(config.step1_weights[r] > 0.0)) {
      throw ValidationError(std::string("step1 weight for ") + resource_name(kAllResources[r]) +
                            " must be positive");
    }
    if (!(config.step2_weights[r] > 0.0)) {
      throw ValidationError(std::string("step2 weight for ") + resource_name(kAllResources[r]) +
                            " must be positive");
    }
  }
  if (config.scheme.class_count() < 2) {
    throw ValidationError("threshold scheme needs at least 2 classes");
  }
  if (config.scheme.mode == ThresholdScheme::Mode::ReferenceVectors) {
    for (std::size_t i = 1; i < config.scheme.boundaries.size(); ++i) {
      if (compare_intensity(config.scheme.boundaries[i - 1], config.scheme.boundaries[i]) !=
          Ordering::Less) {
        throw ValidationError("reference boundaries must be strictly increasing in intensity");
      }
    }
  }
  if (config.top_k < 1) {
    throw ValidationError("top_k must be at least 1");
  }
}

ScenarioConfig with_uniform_alpha(ScenarioConfig config, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  config.alpha.fallback = alpha;
  std::erase_if(config.alpha.overrides, [](const PairOverride& o) { return !o.pinned; });
  return config;
}

}  // namespace conflictgrid
