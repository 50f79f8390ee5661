#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conflictgrid/world.hpp"

namespace conflictgrid {

enum class ResourceKind { Oil = 0, Gas = 1, Fish = 2, Maritime = 3 };

inline constexpr std::size_t kResourceCount = 4;
inline constexpr std::array<ResourceKind, kResourceCount> kAllResources = {
    ResourceKind::Oil, ResourceKind::Gas, ResourceKind::Fish, ResourceKind::Maritime};

const char* resource_name(ResourceKind kind);
std::optional<ResourceKind> resource_from_name(const std::string& name);

// Per-cell nonnegative magnitude for one resource: deposit size for oil/gas,
// presence or abundance for fish, route-membership weight for maritime
// (positive only on route cells). Maritime cells may carry a route tag
// ("NSR", "NWP", ...).
struct ResourceLayer {
  ResourceKind resource = ResourceKind::Oil;
  std::vector<double> values;
  std::vector<std::string> route_ids;  // empty, or one entry per cell

  bool on_route(std::size_t cell) const { return values[cell] > 0.0; }

  friend bool operator==(const ResourceLayer&, const ResourceLayer&) = default;
};

// Zero layer of the given kind sized for the world.
ResourceLayer zero_layer(ResourceKind kind, const World& world);

// Checks shape and nonnegativity; maritime layers must keep route ids only on
// route cells. Throws ValidationError.
void validate_layer(const ResourceLayer& layer, const World& world);

}  // namespace conflictgrid
