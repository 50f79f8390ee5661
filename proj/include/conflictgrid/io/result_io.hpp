#pragma once

#include <string>

#include "conflictgrid/runner.hpp"
#include "conflictgrid/world.hpp"

namespace conflictgrid::io {

// result file: cell_id,row,col,class — one row per cell, row-major.
std::string write_result_csv(const World& world, const ConflictClassField& field);
ConflictClassField parse_result_csv(const std::string& text, const World& world,
                                    std::size_t class_count, const std::string& file_name);

// Forecast grades reuse the result schema, one file per resource.
std::string write_forecast_csv(const World& world, const GradeField& forecast);
GradeField parse_forecast_csv(const std::string& text, const World& world, ResourceKind resource,
                              int grade_count, const std::string& file_name);

// Plain-text grayscale raster: P2, maxval = class_count - 1, one grid row per
// line.
std::string write_pgm(const GridSpec& grid, const ConflictClassField& field);

// Point-per-cell GeoJSON for downstream mapping tools.
std::string write_geojson(const World& world, const ConflictClassField& field);

// Machine-readable run summary: scale sizes, per-class cell counts, hotspots.
std::string write_summary_json(const World& world, const RunResult& result);

// A stored run is a set of files sharing one path prefix:
//   {prefix}.csv, {prefix}.pgm, {prefix}.summary.json,
//   {prefix}.forecast.{oil,gas,fish,maritime}.csv
void write_result_files(const World& world, const RunResult& result, const std::string& prefix);
RunResult parse_result_files(const World& world, const std::string& prefix);

}  // namespace conflictgrid::io
