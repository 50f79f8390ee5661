#include "conflictgrid/io/result_io.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/io/csv.hpp"
#include "conflictgrid/io/files.hpp"

namespace conflictgrid::io {

namespace {

constexpr const char* kResultHeader = "cell_id,row,col,class";

std::string write_class_csv(const World& world, const std::vector<int>& values) {
  const GridSpec& grid = world.grid();
  std::ostringstream out;
  out << kResultHeader << '\n';
  for (std::size_t row = 0; row < grid.rows; ++row) {
    for (std::size_t col = 0; col < grid.cols; ++col) {
      const std::size_t cell = grid.index(row, col);
      out << grid.cell_ids[cell] << ',' << row << ',' << col << ',' << values[cell] << '\n';
    }
  }
  return out.str();
}

std::vector<int> parse_class_csv(const std::string& text, const World& world, int max_value,
                                 const std::string& file_name) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail_at(file_name, 1, "missing header");
  std::string header = lines.front();
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != kResultHeader) {
    fail_at(file_name, 1, "header is '" + header + "', expected '" + kResultHeader + "'");
  }

  std::unordered_map<std::string, std::size_t> index_by_id;
  for (std::size_t cell = 0; cell < world.cell_count(); ++cell) {
    index_by_id.emplace(world.grid().cell_ids[cell], cell);
  }

  std::vector<int> values(world.cell_count(), 0);
  std::vector<bool> filled(world.cell_count(), false);
  std::size_t count = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 4) {
      fail_at(file_name, line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    }
    const auto it = index_by_id.find(fields[0]);
    if (it == index_by_id.end()) {
      fail_at(file_name, line_no, "field 'cell_id': unknown cell '" + fields[0] + "'");
    }
    if (filled[it->second]) {
      fail_at(file_name, line_no, "cell '" + fields[0] + "' listed twice");
    }
    const std::size_t row = parse_index_field(fields[1], {file_name, line_no, "row"});
    const std::size_t col = parse_index_field(fields[2], {file_name, line_no, "col"});
    if (world.grid().index(row, col) != it->second) {
      fail_at(file_name, line_no, "cell '" + fields[0] + "' is not at (" + fields[1] + ", " +
                                      fields[2] + ")");
    }
    const int value = parse_int_field(fields[3], {file_name, line_no, "class"});
    if (value < 0 || value > max_value) {
      fail_at(file_name, line_no,
              "field 'class': " + fields[3] + " outside 0.." + std::to_string(max_value));
    }
    filled[it->second] = true;
    values[it->second] = value;
    ++count;
  }
  if (count != world.cell_count()) {
    fail_at(file_name, lines.size(),
            "got " + std::to_string(count) + " cells, world has " +
                std::to_string(world.cell_count()));
  }
  return values;
}

}  // namespace

std::string write_result_csv(const World& world, const ConflictClassField& field) {
  return write_class_csv(world, field.classes);
}

ConflictClassField parse_result_csv(const std::string& text, const World& world,
                                    std::size_t class_count, const std::string& file_name) {
  ConflictClassField field;
  field.class_count = class_count;
  field.classes = parse_class_csv(text, world, static_cast<int>(class_count) - 1, file_name);
  return field;
}

std::string write_forecast_csv(const World& world, const GradeField& forecast) {
  return write_class_csv(world, forecast.grades);
}

GradeField parse_forecast_csv(const std::string& text, const World& world, ResourceKind resource,
                              int grade_count, const std::string& file_name) {
  GradeField field;
  field.label = "forecast";
  field.resource = resource;
  field.grade_count = grade_count;
  field.grades = parse_class_csv(text, world, grade_count - 1, file_name);
  return field;
}

std::string write_pgm(const GridSpec& grid, const ConflictClassField& field) {
  std::ostringstream out;
  out << "P2\n" << grid.cols << ' ' << grid.rows << '\n' << field.class_count - 1 << '\n';
  for (std::size_t row = 0; row < grid.rows; ++row) {
    for (std::size_t col = 0; col < grid.cols; ++col) {
      if (col > 0) out << ' ';
      out << field.classes[grid.index(row, col)];
    }
    out << '\n';
  }
  return out.str();
}

std::string write_geojson(const World& world, const ConflictClassField& field) {
  const GridSpec& grid = world.grid();
  nlohmann::json features = nlohmann::json::array();
  for (std::size_t row = 0; row < grid.rows; ++row) {
    for (std::size_t col = 0; col < grid.cols; ++col) {
      const std::size_t cell = grid.index(row, col);
      nlohmann::json feature;
      feature["type"] = "Feature";
      feature["geometry"] = {{"type", "Point"},
                             {"coordinates", {grid.centers[cell].lon_deg, grid.centers[cell].lat_deg}}};
      feature["properties"] = {{"cell_id", grid.cell_ids[cell]},
                               {"class", field.classes[cell]},
                               {"owner", world.international(cell)
                                             ? kInternationalToken
                                             : world.country_at(static_cast<std::size_t>(
                                                                    world.ownership()[cell]))
                                                   .code}};
      features.push_back(std::move(feature));
    }
  }
  nlohmann::json doc;
  doc["type"] = "FeatureCollection";
  doc["features"] = std::move(features);
  return doc.dump(2) + "\n";
}

std::string write_summary_json(const World& world, const RunResult& result) {
  (void)world;
  nlohmann::json doc;
  doc["grade_count"] = result.grade_count;
  doc["class_count"] = result.class_count;
  doc["class_counts"] = result.class_counts;
  nlohmann::json hotspots = nlohmann::json::array();
  for (const Hotspot& h : result.hotspots) {
    nlohmann::json entry;
    entry["cell_id"] = h.cell_id;
    entry["class"] = h.conflict_class;
    entry["vector"] = h.vector.grades;
    hotspots.push_back(std::move(entry));
  }
  doc["hotspots"] = std::move(hotspots);
  return doc.dump(2) + "\n";
}

void write_result_files(const World& world, const RunResult& result, const std::string& prefix) {
  write_file(prefix + ".csv", write_result_csv(world, result.overall));
  write_file(prefix + ".pgm", write_pgm(world.grid(), result.overall));
  write_file(prefix + ".summary.json", write_summary_json(world, result));
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    write_file(prefix + ".forecast." + resource_name(kAllResources[r]) + ".csv",
               write_forecast_csv(world, result.forecasts[r]));
  }
}

RunResult parse_result_files(const World& world, const std::string& prefix) {
  const std::string summary_path = prefix + ".summary.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(summary_path));
  } catch (const nlohmann::json::parse_error& err) {
    throw ValidationError(summary_path + ": " + err.what());
  }

  RunResult result;
  try {
    result.grade_count = doc.at("grade_count").get<int>();
    result.class_count = doc.at("class_count").get<std::size_t>();
    result.class_counts = doc.at("class_counts").get<std::vector<std::size_t>>();
    for (const auto& entry : doc.at("hotspots")) {
      Hotspot h;
      h.cell_id = entry.at("cell_id").get<std::string>();
      h.conflict_class = entry.at("class").get<int>();
      h.vector.grades = entry.at("vector").get<std::vector<int>>();
      bool found = false;
      for (std::size_t cell = 0; cell < world.cell_count(); ++cell) {
        if (world.grid().cell_ids[cell] == h.cell_id) {
          h.cell = cell;
          found = true;
          break;
        }
      }
      if (!found) {
        throw ValidationError(summary_path + ": hotspot names unknown cell '" + h.cell_id + "'");
      }
      result.hotspots.push_back(std::move(h));
    }
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(summary_path + ": " + err.what());
  }

  if (result.grade_count < 2 || result.class_count < 2) {
    throw ValidationError(summary_path + ": scale sizes must be at least 2");
  }

  result.overall =
      parse_result_csv(read_file(prefix + ".csv"), world, result.class_count, prefix + ".csv");
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    const std::string path = prefix + ".forecast." + resource_name(kAllResources[r]) + ".csv";
    result.forecasts.push_back(
        parse_forecast_csv(read_file(path), world, kAllResources[r], result.grade_count, path));
  }
  return result;
}

}  // namespace conflictgrid::io
