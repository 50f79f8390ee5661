#include "conflictgrid/layers.hpp"

#include <cmath>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

const char* resource_name(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Oil: return "oil";
    case ResourceKind::Gas: return "gas";
    case ResourceKind::Fish: return "fish";
    case ResourceKind::Maritime: return "maritime";
  }
  return "?";
}

std::optional<ResourceKind> resource_from_name(const std::string& name) {
  for (ResourceKind kind : kAllResources) {
    if (name == resource_name(kind)) return kind;
  }
  return std::nullopt;
}

ResourceLayer zero_layer(ResourceKind kind, const World& world) {
  ResourceLayer layer;
  layer.resource = kind;
  layer.values.assign(world.cell_count(), 0.0);
  if (kind == ResourceKind::Maritime) layer.route_ids.assign(world.cell_count(), "");
  return layer;
}

void validate_layer(const ResourceLayer& layer, const World& world) {
  const char* name = resource_name(layer.resource);
  if (layer.values.size() != world.cell_count()) {
    throw ValidationError(std::string(name) + " layer has " + std::to_string(layer.values.size()) +
                          " cells, world has " + std::to_string(world.cell_count()));
  }
  if (!layer.route_ids.empty() && layer.route_ids.size() != world.cell_count()) {
    throw ValidationError(std::string(name) + " layer route ids do not match the cell count");
  }
  for (std::size_t cell = 0; cell < layer.values.size(); ++cell) {
    const double v = layer.values[cell];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError(std::string(name) + " layer value at cell '" +
                            world.grid().cell_ids[cell] + "' must be a finite nonnegative number");
    }
    if (!layer.route_ids.empty() && !layer.route_ids[cell].empty()) {
      if (layer.resource != ResourceKind::Maritime) {
        throw ValidationError(std::string(name) + " layer carries a route id at cell '" +
                              world.grid().cell_ids[cell] + "'");
      }
      if (v <= 0.0) {
        throw ValidationError("route id on off-route cell '" + world.grid().cell_ids[cell] + "'");
      }
    }
  }
}

}  // namespace conflictgrid
