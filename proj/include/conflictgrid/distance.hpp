#pragma once

#include <string>
#include <vector>

#include "conflictgrid/world.hpp"

namespace conflictgrid {

// Per-cell distance (km) from each cell center to a country. Zero exactly on
// the country's own cells; otherwise the minimum great-circle distance to any
// owned cell center, or to the configured anchor when the country owns no
// cells. Ownership by *other* countries does not enter here: foreign-EEZ
// cells keep their geometric distance and the alpha factor handles the rest.
struct DistanceField {
  std::string country;
  std::vector<double> km;

  friend bool operator==(const DistanceField&, const DistanceField&) = default;
};

// Throws ValidationError for an undeclared country, or one with neither owned
// cells nor an anchor point.
DistanceField distance_field(const World& world, const std::string& country_code);

// Distance fields for every declared country, in declaration order.
std::vector<DistanceField> compute_distance_fields(const World& world);

}  // namespace conflictgrid
