#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "conflictgrid/distance.hpp"
#include "conflictgrid/layers.hpp"
#include "conflictgrid/world.hpp"

namespace conflictgrid {

inline constexpr double kDefaultDecayKm = 1000.0;

// Distance decay g(d) = 1 + d / scale_km. Equals 1 at d = 0 so a deposit
// inside the owner's EEZ keeps its face value, and grows without bound so
// remote deposits fade out.
struct DecayFunction {
  double scale_km = kDefaultDecayKm;

  double operator()(double distance_km) const { return 1.0 + distance_km / scale_km; }

  friend bool operator==(const DecayFunction&, const DecayFunction&) = default;
};

DecayFunction make_decay(double scale_km);  // throws on scale_km <= 0

// Parameters of the shipping-route utility. `importance` scales the base
// utility for countries without Arctic-water EEZs (how much the routes would
// save them), one entry per such country, each in (0, 1].
struct MaritimeParams {
  double base_utility = 1.0;  // a > 0
  DecayFunction decay;        // h(*)
  std::unordered_map<std::string, double> importance;
};

// Per-(country, resource) nonnegative utility over the grid.
struct UtilityField {
  std::string country;
  ResourceKind resource = ResourceKind::Oil;
  std::vector<double> values;

  friend bool operator==(const UtilityField&, const UtilityField&) = default;
};

// Single-cell deposit formula: zone_factor * deposit / g(distance).
// zone_factor is 1 on own-EEZ and international cells, alpha on foreign-EEZ
// cells.
double deposit_utility_value(double deposit, double distance_km, const DecayFunction& g,
                             double zone_factor);

// Deposit-style utility (oil, gas, fish) for one country. Rejects maritime
// layers and alpha outside [0, 1].
UtilityField deposit_utility(const World& world, const DistanceField& dist,
                             const ResourceLayer& layer, const std::string& country_code,
                             const DecayFunction& g, double alpha);

// Convenience overload that computes the distance field itself.
UtilityField deposit_utility(const World& world, const ResourceLayer& layer,
                             const std::string& country_code, const DecayFunction& g,
                             double alpha);

// Route utility. Zero off route cells. Arctic countries: a inside their own
// EEZ, a/h(dist) on international route cells, alpha-scaled a/h(dist) inside
// foreign EEZs. Non-Arctic countries: a * importance with no distance decay,
// alpha-scaled inside any EEZ.
UtilityField maritime_utility(const World& world, const DistanceField& dist,
                              const ResourceLayer& layer, const Country& country,
                              const MaritimeParams& params, double alpha);

UtilityField maritime_utility(const World& world, const ResourceLayer& layer,
                              const Country& country, const MaritimeParams& params,
                              double alpha);

}  // namespace conflictgrid
