#include "conflictgrid/world.hpp"

#include <unordered_set>
#include <utility>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

GridSpec make_grid(std::size_t rows, std::size_t cols, std::vector<LatLon> centers,
                   double southern_bound_deg) {
  GridSpec grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.centers = std::move(centers);
  grid.southern_bound_deg = southern_bound_deg;
  grid.cell_ids.reserve(grid.centers.size());
  for (std::size_t i = 0; i < grid.centers.size(); ++i) {
    grid.cell_ids.push_back("c" + std::to_string(i));
  }
  validate_grid(grid);
  return grid;
}

void validate_grid(const GridSpec& grid) {
  if (grid.rows == 0 || grid.cols == 0) {
    throw ValidationError("grid must have at least one row and one column");
  }
  if (grid.centers.size() != grid.rows * grid.cols) {
    throw ValidationError("grid has " + std::to_string(grid.centers.size()) +
                          " cell centers, expected " + std::to_string(grid.rows * grid.cols));
  }
  if (grid.cell_ids.size() != grid.centers.size()) {
    throw ValidationError("grid cell id count does not match cell count");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : grid.cell_ids) {
    if (id.empty()) throw ValidationError("empty cell id");
    if (!seen.insert(id).second) throw ValidationError("duplicate cell id '" + id + "'");
  }
  for (std::size_t i = 0; i < grid.centers.size(); ++i) {
    const LatLon& c = grid.centers[i];
    if (!valid_lat_lon(c)) {
      throw ValidationError("cell '" + grid.cell_ids[i] + "' has invalid coordinates");
    }
    if (c.lat_deg < grid.southern_bound_deg) {
      throw ValidationError("cell '" + grid.cell_ids[i] + "' lies south of the region bound (" +
                            std::to_string(grid.southern_bound_deg) + " deg)");
    }
  }
}

int World::country_index(const std::string& code) const {
  auto it = index_by_code_.find(code);
  return it == index_by_code_.end() ? -1 : it->second;
}

std::vector<std::size_t> World::owned_cells(int country_idx) const {
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < ownership_.size(); ++i) {
    if (ownership_[i] == country_idx) cells.push_back(i);
  }
  return cells;
}

World build_world(GridSpec grid, std::vector<Country> countries,
                  const std::vector<std::string>& owner_codes) {
  validate_grid(grid);
  if (owner_codes.size() != grid.cell_count()) {
    throw ValidationError("ownership has " + std::to_string(owner_codes.size()) +
                          " entries, expected " + std::to_string(grid.cell_count()));
  }

  World world;
  world.grid_ = std::move(grid);
  world.countries_ = std::move(countries);

  for (std::size_t i = 0; i < world.countries_.size(); ++i) {
    const Country& c = world.countries_[i];
    if (c.code.empty() || c.code == kInternationalToken) {
      throw ValidationError("invalid country code '" + c.code + "'");
    }
    if (c.anchor && !valid_lat_lon(*c.anchor)) {
      throw ValidationError("country '" + c.code + "' has an invalid anchor point");
    }
    if (!world.index_by_code_.emplace(c.code, static_cast<int>(i)).second) {
      throw ValidationError("duplicate country code '" + c.code + "'");
    }
  }

  world.ownership_.reserve(owner_codes.size());
  for (std::size_t cell = 0; cell < owner_codes.size(); ++cell) {
    const std::string& code = owner_codes[cell];
    if (code.empty() || code == kInternationalToken) {
      world.ownership_.push_back(kInternational);
      continue;
    }
    const int idx = world.country_index(code);
    if (idx < 0) {
      throw ValidationError("cell '" + world.grid_.cell_ids[cell] + "' assigned to undeclared country '" +
                            code + "'");
    }
    if (world.countries_[idx].kind == CountryKind::NonArctic) {
      throw ValidationError("non-Arctic country '" + code + "' cannot own cell '" +
                            world.grid_.cell_ids[cell] + "'");
    }
    world.ownership_.push_back(idx);
  }
  return world;
}

}  // namespace conflictgrid
