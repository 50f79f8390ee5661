#include "conflictgrid/utility.hpp"

#include <string>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

int checked_country_index(const World& world, const std::string& code) {
  const int idx = world.country_index(code);
  if (idx < 0) throw ValidationError("undeclared country '" + code + "'");
  return idx;
}

void check_distance_shape(const World& world, const DistanceField& dist, const std::string& code) {
  if (dist.country != code) {
    throw ValidationError("distance field belongs to '" + dist.country + "', expected '" + code +
                          "'");
  }
  if (dist.km.size() != world.cell_count()) {
    throw ValidationError("distance field size does not match the grid");
  }
}

}  // namespace

DecayFunction make_decay(double scale_km) {
  if (!(scale_km > 0.0)) {
    throw ValidationError("decay scale must be positive, got " + std::to_string(scale_km));
  }
  return DecayFunction{scale_km};
}

double deposit_utility_value(double deposit, double distance_km, const DecayFunction& g,
                             double zone_factor) {
  return zone_factor * deposit / g(distance_km);
}

UtilityField deposit_utility(const World& world, const DistanceField& dist,
                             const ResourceLayer& layer, const std::string& country_code,
                             const DecayFunction& g, double alpha) {
  if (layer.resource == ResourceKind::Maritime) {
    throw ValidationError("deposit utility is undefined for the maritime layer");
  }
  check_alpha(alpha);
  validate_layer(layer, world);
  const int idx = checked_country_index(world, country_code);
  check_distance_shape(world, dist, country_code);

  UtilityField field;
  field.country = country_code;
  field.resource = layer.resource;
  field.values.resize(world.cell_count());
  for (std::size_t cell = 0; cell < world.cell_count(); ++cell) {
    const double factor = world.zone(cell, idx) == CellZone::Foreign ? alpha : 1.0;
    field.values[cell] = deposit_utility_value(layer.values[cell], dist.km[cell], g, factor);
  }
  return field;
}

UtilityField deposit_utility(const World& world, const ResourceLayer& layer,
                             const std::string& country_code, const DecayFunction& g,
                             double alpha) {
  return deposit_utility(world, distance_field(world, country_code), layer, country_code, g,
                         alpha);
}

UtilityField maritime_utility(const World& world, const DistanceField& dist,
                              const ResourceLayer& layer, const Country& country,
                              const MaritimeParams& params, double alpha) {
  if (layer.resource != ResourceKind::Maritime) {
    throw ValidationError("maritime utility requires the maritime layer, got " +
                          std::string(resource_name(layer.resource)));
  }
  check_alpha(alpha);
  if (!(params.base_utility > 0.0)) {
    throw ValidationError("maritime base utility must be positive");
  }
  validate_layer(layer, world);
  const int idx = checked_country_index(world, country.code);
  check_distance_shape(world, dist, country.code);

  double importance = 1.0;
  if (country.kind == CountryKind::NonArctic) {
    auto it = params.importance.find(country.code);
    if (it == params.importance.end()) {
      throw ValidationError("missing maritime importance for non-Arctic country '" + country.code +
                            "'");
    }
    importance = it->second;
    if (!(importance > 0.0 && importance <= 1.0)) {
      throw ValidationError("maritime importance for '" + country.code + "' must lie in (0, 1]");
    }
  }

  const double a = params.base_utility;
  UtilityField field;
  field.country = country.code;
  field.resource = ResourceKind::Maritime;
  field.values.assign(world.cell_count(), 0.0);

  for (std::size_t cell = 0; cell < world.cell_count(); ++cell) {
    if (!layer.on_route(cell)) continue;
    const CellZone zone = world.zone(cell, idx);
    double u;
    if (country.kind == CountryKind::Arctic) {
      switch (zone) {
        case CellZone::Own: u = a; break;
        case CellZone::International: u = a / params.decay(dist.km[cell]); break;
        case CellZone::Foreign:
        default: u = alpha * a / params.decay(dist.km[cell]); break;
      }
    } else {
      // Route value does not fade with distance for non-Arctic users; only
      // ownership matters.
      u = zone == CellZone::International ? a * importance : alpha * a * importance;
    }
    field.values[cell] = u;
  }
  return field;
}

UtilityField maritime_utility(const World& world, const ResourceLayer& layer,
                              const Country& country, const MaritimeParams& params, double alpha) {
  return maritime_utility(world, distance_field(world, country.code), layer, country, params,
                          alpha);
}

}  // namespace conflictgrid
