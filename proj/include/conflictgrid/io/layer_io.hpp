#pragma once

#include <string>

#include "conflictgrid/layers.hpp"
#include "conflictgrid/world.hpp"

namespace conflictgrid::io {

// layer file: cell_id,resource,value plus a route_id column for maritime
// layers. Cells not listed default to zero; every row must carry the
// expected resource.
ResourceLayer parse_layer(const std::string& text, const World& world, ResourceKind expected,
                          const std::string& file_name);
std::string write_layer(const ResourceLayer& layer, const World& world);

}  // namespace conflictgrid::io
