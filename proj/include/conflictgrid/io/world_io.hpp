#pragma once

#include <string>
#include <vector>

#include "conflictgrid/world.hpp"

namespace conflictgrid::io {

// countries file: code,kind,anchor_lat,anchor_lon
//   kind is "arctic" or "non_arctic"; anchor fields may be empty.
std::vector<Country> parse_countries(const std::string& text, const std::string& file_name);
std::string write_countries(const std::vector<Country>& countries);

// world file: cell_id,row,col,lat,lon,owner
//   owner is a declared country code or "INTL". Every (row, col) of the
//   bounding shape must appear exactly once; cell ids must be unique.
World parse_world(const std::string& text, std::vector<Country> countries,
                  const std::string& file_name,
                  double southern_bound_deg = kDefaultSouthernBoundDeg);
std::string write_world(const World& world);

}  // namespace conflictgrid::io
