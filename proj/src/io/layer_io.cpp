#include "conflictgrid/io/layer_io.hpp"

#include <sstream>
#include <unordered_map>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/io/csv.hpp"

namespace conflictgrid::io {

namespace {
constexpr const char* kLayerHeader = "cell_id,resource,value";
constexpr const char* kMaritimeHeader = "cell_id,resource,value,route_id";
}  // namespace

ResourceLayer parse_layer(const std::string& text, const World& world, ResourceKind expected,
                          const std::string& file_name) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail_at(file_name, 1, "missing header");
  std::string header = lines.front();
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const bool with_route = expected == ResourceKind::Maritime;
  const char* expected_header = with_route ? kMaritimeHeader : kLayerHeader;
  if (header != expected_header) {
    fail_at(file_name, 1,
            std::string("header is '") + header + "', expected '" + expected_header + "'");
  }

  std::unordered_map<std::string, std::size_t> index_by_id;
  for (std::size_t cell = 0; cell < world.cell_count(); ++cell) {
    index_by_id.emplace(world.grid().cell_ids[cell], cell);
  }

  ResourceLayer layer = zero_layer(expected, world);

  std::unordered_map<std::string, std::size_t> seen;
  const std::size_t expected_fields = with_route ? 4 : 3;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != expected_fields) {
      fail_at(file_name, line_no,
              "expected " + std::to_string(expected_fields) + " fields, got " +
                  std::to_string(fields.size()));
    }
    const auto it = index_by_id.find(fields[0]);
    if (it == index_by_id.end()) {
      fail_at(file_name, line_no, "field 'cell_id': unknown cell '" + fields[0] + "'");
    }
    if (!seen.emplace(fields[0], line_no).second) {
      fail_at(file_name, line_no, "cell '" + fields[0] + "' listed twice");
    }
    if (fields[1] != resource_name(expected)) {
      fail_at(file_name, line_no,
              "field 'resource': got '" + fields[1] + "', this file holds '" +
                  resource_name(expected) + "'");
    }
    const double value = parse_double_field(fields[2], {file_name, line_no, "value"});
    if (value < 0.0) {
      fail_at(file_name, line_no, "field 'value': must be nonnegative, got " + fields[2]);
    }
    layer.values[it->second] = value;
    if (with_route && !fields[3].empty()) {
      if (value <= 0.0) {
        fail_at(file_name, line_no, "field 'route_id': set on a cell with zero value");
      }
      layer.route_ids[it->second] = fields[3];
    }
  }
  return layer;
}

std::string write_layer(const ResourceLayer& layer, const World& world) {
  const bool with_route = layer.resource == ResourceKind::Maritime;
  std::ostringstream out;
  out << (with_route ? kMaritimeHeader : kLayerHeader) << '\n';
  for (std::size_t cell = 0; cell < layer.values.size(); ++cell) {
    if (layer.values[cell] == 0.0) continue;  // zero cells are implicit
    out << world.grid().cell_ids[cell] << ',' << resource_name(layer.resource) << ','
        << format_double(layer.values[cell]);
    if (with_route) {
      out << ',' << (layer.route_ids.empty() ? "" : layer.route_ids[cell]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace conflictgrid::io
