#include "conflictgrid/io/world_io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/io/csv.hpp"

namespace conflictgrid::io {

namespace {

constexpr const char* kCountriesHeader = "code,kind,anchor_lat,anchor_lon";
constexpr const char* kWorldHeader = "cell_id,row,col,lat,lon,owner";
constexpr const char* kArcticToken = "arctic";
constexpr const char* kNonArcticToken = "non_arctic";

void check_header(const std::vector<std::string>& lines, const char* expected,
                  const std::string& file) {
  if (lines.empty()) fail_at(file, 1, std::string("missing header '") + expected + "'");
  std::string got = lines.front();
  if (!got.empty() && got.back() == '\r') got.pop_back();
  if (got != expected) {
    fail_at(file, 1, "header is '" + got + "', expected '" + expected + "'");
  }
}

}  // namespace

std::vector<Country> parse_countries(const std::string& text, const std::string& file_name) {
  const auto lines = split_lines(text);
  check_header(lines, kCountriesHeader, file_name);

  std::vector<Country> countries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 4) {
      fail_at(file_name, line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    }
    Country country;
    country.code = fields[0];
    if (country.code.empty()) fail_at(file_name, line_no, "field 'code': must not be empty");
    if (fields[1] == kArcticToken) {
      country.kind = CountryKind::Arctic;
    } else if (fields[1] == kNonArcticToken) {
      country.kind = CountryKind::NonArctic;
    } else {
      fail_at(file_name, line_no, "field 'kind': '" + fields[1] + "' is not 'arctic' or 'non_arctic'");
    }
    const bool has_lat = !fields[2].empty();
    const bool has_lon = !fields[3].empty();
    if (has_lat != has_lon) {
      fail_at(file_name, line_no, "anchor needs both latitude and longitude");
    }
    if (has_lat) {
      LatLon anchor;
      anchor.lat_deg = parse_double_field(fields[2], {file_name, line_no, "anchor_lat"});
      anchor.lon_deg = parse_double_field(fields[3], {file_name, line_no, "anchor_lon"});
      if (!valid_lat_lon(anchor)) {
        fail_at(file_name, line_no, "anchor coordinates out of range");
      }
      country.anchor = anchor;
    }
    countries.push_back(std::move(country));
  }
  if (countries.empty()) fail_at(file_name, 1, "no countries");
  return countries;
}

std::string write_countries(const std::vector<Country>& countries) {
  std::ostringstream out;
  out << kCountriesHeader << '\n';
  for (const Country& c : countries) {
    out << c.code << ',' << (c.kind == CountryKind::Arctic ? kArcticToken : kNonArcticToken)
        << ',';
    if (c.anchor) {
      out << format_double(c.anchor->lat_deg) << ',' << format_double(c.anchor->lon_deg);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

World parse_world(const std::string& text, std::vector<Country> countries,
                  const std::string& file_name, double southern_bound_deg) {
  const auto lines = split_lines(text);
  check_header(lines, kWorldHeader, file_name);

  struct Row {
    std::string id;
    std::size_t row, col, line_no;
    LatLon center;
    std::string owner;
  };
  std::vector<Row> rows;
  std::size_t max_row = 0;
  std::size_t max_col = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 6) {
      fail_at(file_name, line_no, "expected 6 fields, got " + std::to_string(fields.size()));
    }
    Row row;
    row.id = fields[0];
    if (row.id.empty()) fail_at(file_name, line_no, "field 'cell_id': must not be empty");
    row.row = parse_index_field(fields[1], {file_name, line_no, "row"});
    row.col = parse_index_field(fields[2], {file_name, line_no, "col"});
    // No grid can have more rows or columns than the file has lines.
    if (row.row >= lines.size() || row.col >= lines.size()) {
      fail_at(file_name, line_no, "row/col index out of range for this file");
    }
    row.center.lat_deg = parse_double_field(fields[3], {file_name, line_no, "lat"});
    row.center.lon_deg = parse_double_field(fields[4], {file_name, line_no, "lon"});
    row.owner = fields[5];
    row.line_no = line_no;
    max_row = std::max(max_row, row.row);
    max_col = std::max(max_col, row.col);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail_at(file_name, lines.size(), "no cells");

  GridSpec grid;
  grid.rows = max_row + 1;
  grid.cols = max_col + 1;
  grid.southern_bound_deg = southern_bound_deg;
  if (rows.size() != grid.rows * grid.cols) {
    fail_at(file_name, lines.size(),
            "got " + std::to_string(rows.size()) + " cells for a " + std::to_string(grid.rows) +
                "x" + std::to_string(grid.cols) + " grid");
  }
  grid.centers.resize(rows.size());
  grid.cell_ids.resize(rows.size());
  std::vector<std::string> owners(rows.size());
  std::vector<bool> filled(rows.size(), false);
  std::unordered_map<std::string, std::size_t> id_lines;
  for (const Row& row : rows) {
    const auto [it, inserted] = id_lines.emplace(row.id, row.line_no);
    if (!inserted) {
      fail_at(file_name, row.line_no,
              "duplicate cell id '" + row.id + "' (first seen on line " +
                  std::to_string(it->second) + ")");
    }
    const std::size_t index = grid.index(row.row, row.col);
    if (filled[index]) {
      fail_at(file_name, row.line_no,
              "cell (" + std::to_string(row.row) + ", " + std::to_string(row.col) +
                  ") listed twice");
    }
    filled[index] = true;
    grid.centers[index] = row.center;
    grid.cell_ids[index] = row.id;
    owners[index] = row.owner == kInternationalToken ? std::string() : row.owner;
    if (!owners[index].empty()) {
      const bool declared = std::any_of(countries.begin(), countries.end(),
                                        [&](const Country& c) { return c.code == row.owner; });
      if (!declared) {
        fail_at(file_name, row.line_no, "field 'owner': unknown country '" + row.owner + "'");
      }
    }
  }

  try {
    return build_world(std::move(grid), std::move(countries), owners);
  } catch (const ValidationError& err) {
    throw ValidationError(file_name + ": " + err.what());
  }
}

std::string write_world(const World& world) {
  const GridSpec& grid = world.grid();
  std::ostringstream out;
  out << kWorldHeader << '\n';
  for (std::size_t row = 0; row < grid.rows; ++row) {
    for (std::size_t col = 0; col < grid.cols; ++col) {
      const std::size_t cell = grid.index(row, col);
      const int owner = world.ownership()[cell];
      out << grid.cell_ids[cell] << ',' << row << ',' << col << ','
          << format_double(grid.centers[cell].lat_deg) << ','
          << format_double(grid.centers[cell].lon_deg) << ','
          << (owner == kInternational ? kInternationalToken
                                      : world.country_at(static_cast<std::size_t>(owner)).code.c_str())
          << '\n';
    }
  }
  return out.str();
}

}  // namespace conflictgrid::io
