#include "conflictgrid/distance.hpp"

#include <algorithm>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/geo.hpp"

namespace conflictgrid {

DistanceField distance_field(const World& world, const std::string& country_code) {
  const int idx = world.country_index(country_code);
  if (idx < 0) throw ValidationError("undeclared country '" + country_code + "'");

  const Country& country = world.country_at(static_cast<std::size_t>(idx));
  const std::vector<std::size_t> owned = world.owned_cells(idx);
  if (owned.empty() && !country.anchor) {
    throw ValidationError("country '" + country_code +
                          "' owns no cells and has no anchor point to measure distance from");
  }

  const auto& centers = world.grid().centers;
  DistanceField field;
  field.country = country_code;
  field.km.resize(world.cell_count(), 0.0);

  for (std::size_t cell = 0; cell < world.cell_count(); ++cell) {
    if (world.owned_by(cell, idx)) continue;  // stays 0
    double best;
    if (!owned.empty()) {
      best = great_circle_km(centers[cell], centers[owned.front()]);
      for (std::size_t k = 1; k < owned.size(); ++k) {
        best = std::min(best, great_circle_km(centers[cell], centers[owned[k]]));
      }
    } else {
      best = great_circle_km(centers[cell], *country.anchor);
    }
    field.km[cell] = best;
  }
  return field;
}

std::vector<DistanceField> compute_distance_fields(const World& world) {
  std::vector<DistanceField> fields;
  fields.reserve(world.countries().size());
  for (const Country& c : world.countries()) {
    fields.push_back(distance_field(world, c.code));
  }
  return fields;
}

}  // namespace conflictgrid
