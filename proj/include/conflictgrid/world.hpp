#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conflictgrid/geo.hpp"

namespace conflictgrid {

// Grids cover the appraisal region, so cell centers may not dip below this
// latitude unless a caller configures a different bound.
inline constexpr double kDefaultSouthernBoundDeg = 66.0;

// Rectangular grid of cell centers, row-major. Each cell carries a stable
// string id used by the file formats.
struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LatLon> centers;       // rows * cols entries
  std::vector<std::string> cell_ids; // unique, same length as centers
  double southern_bound_deg = kDefaultSouthernBoundDeg;

  std::size_t cell_count() const { return rows * cols; }
  std::size_t index(std::size_t row, std::size_t col) const { return row * cols + col; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Builds a grid with canonical ids ("c0", "c1", ...) and validates it.
GridSpec make_grid(std::size_t rows, std::size_t cols, std::vector<LatLon> centers,
                   double southern_bound_deg = kDefaultSouthernBoundDeg);

// Validates an already-assembled grid (shape, id uniqueness, coordinate
// ranges, southern bound). Throws ValidationError.
void validate_grid(const GridSpec& grid);

enum class CountryKind { Arctic, NonArctic };

struct Country {
  std::string code;
  CountryKind kind = CountryKind::Arctic;
  // Distance origin for countries that own no cells (home port / nearest
  // coastal reference). Required for non-Arctic countries.
  std::optional<LatLon> anchor;

  friend bool operator==(const Country&, const Country&) = default;
};

// A cell is either inside some country's EEZ or in international waters.
inline constexpr int kInternational = -1;

// How a cell relates to one particular country. Drives the alpha factor and
// the maritime branch selection.
enum class CellZone { Own, Foreign, International };

class World {
 public:
  World() = default;

  const GridSpec& grid() const { return grid_; }
  const std::vector<Country>& countries() const { return countries_; }
  // Country index per cell, kInternational for unowned cells.
  const std::vector<int>& ownership() const { return ownership_; }

  std::size_t cell_count() const { return grid_.cell_count(); }

  int country_index(const std::string& code) const;  // -1 if undeclared
  const Country& country_at(std::size_t idx) const { return countries_[idx]; }

  bool owned_by(std::size_t cell, int country_idx) const { return ownership_[cell] == country_idx; }
  bool international(std::size_t cell) const { return ownership_[cell] == kInternational; }

  CellZone zone(std::size_t cell, int country_idx) const {
    if (ownership_[cell] == kInternational) return CellZone::International;
    return ownership_[cell] == country_idx ? CellZone::Own : CellZone::Foreign;
  }

  // Cells owned by the given country, in row-major order.
  std::vector<std::size_t> owned_cells(int country_idx) const;

  friend bool operator==(const World&, const World&) = default;

  friend World build_world(GridSpec grid, std::vector<Country> countries,
                           const std::vector<std::string>& owner_codes);

 private:
  GridSpec grid_;
  std::vector<Country> countries_;
  std::vector<int> ownership_;
  std::unordered_map<std::string, int> index_by_code_;
};

// Validates and assembles a World. `owner_codes` holds one country code per
// cell, with "INTL" (or empty) for international waters.
//
// Throws ValidationError on: shape mismatch, undeclared owner code, duplicate
// country codes, or a non-Arctic country owning a cell.
World build_world(GridSpec grid, std::vector<Country> countries,
                  const std::vector<std::string>& owner_codes);

inline constexpr const char* kInternationalToken = "INTL";

}  // namespace conflictgrid
