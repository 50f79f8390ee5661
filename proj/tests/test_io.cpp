#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include <json.hpp>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/fixtures.hpp"
#include "conflictgrid/io/config_io.hpp"
#include "conflictgrid/io/csv.hpp"
#include "conflictgrid/io/files.hpp"
#include "conflictgrid/io/layer_io.hpp"
#include "conflictgrid/io/result_io.hpp"
#include "conflictgrid/io/world_io.hpp"
#include "conflictgrid/runner.hpp"

using namespace conflictgrid;
namespace fs = std::filesystem;

namespace {

std::string temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "conflictgrid_io_tests";
  fs::create_directories(dir);
  return dir.string();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

template <typename Fn>
std::string message_of(Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError& err) {
    return err.what();
  }
  return "";
}

}  // namespace

TEST_CASE("format_double emits shortest round-trip decimals") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(85.0) == "85");
  CHECK(io::format_double(-180.0) == "-180");
  CHECK(io::format_double(2.0 / 3.0) == "0.6666666666666666");
}

TEST_CASE("world and countries files round-trip") {
  const auto fx = fixtures::arctic9();
  const std::string countries_text = io::write_countries(fx.world.countries());
  const std::string world_text = io::write_world(fx.world);

  const auto countries = io::parse_countries(countries_text, "countries.csv");
  CHECK(countries == fx.world.countries());
  const World world = io::parse_world(world_text, countries, "world.csv");
  CHECK(world == fx.world);
  CHECK(io::write_world(world) == world_text);
}

TEST_CASE("layer files round-trip") {
  for (const auto& fx : {fixtures::arctic9(), fixtures::dual_zone()}) {
    for (const ResourceLayer& layer : fx.layers) {
      const std::string text = io::write_layer(layer, fx.world);
      const ResourceLayer parsed = io::parse_layer(text, fx.world, layer.resource, "layer.csv");
      CHECK(parsed == layer);
      CHECK(io::write_layer(parsed, fx.world) == text);
    }
  }
}

TEST_CASE("parse_world accepts a minimal 4-cell file") {
  const std::string text =
      "cell_id,row,col,lat,lon,owner\n"
      "a,0,0,70,10,INTL\n"
      "b,0,1,70,12,INTL\n"
      "c,1,0,69,10,RU\n"
      "d,1,1,69,12,INTL\n";
  const World world =
      io::parse_world(text, {{"RU", CountryKind::Arctic, std::nullopt}}, "w.csv");
  CHECK(world.grid().rows == 2);
  CHECK(world.grid().cols == 2);
  CHECK(world.grid().cell_ids == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(world.ownership()[2] == 0);
  CHECK(world.international(0));
}

TEST_CASE("parse_world errors name the file, line and field") {
  const std::vector<Country> countries = {{"RU", CountryKind::Arctic, std::nullopt}};

  CHECK(contains(message_of([&] { io::parse_world("cell_id,row,col,lat,lon,owner\n", countries, "w.csv"); }),
                 "no cells"));

  const std::string bad_owner =
      "cell_id,row,col,lat,lon,owner\n"
      "c0,0,0,70,10,RU\n"
      "c1,0,1,70,12,XX\n";
  const std::string msg = message_of([&] { io::parse_world(bad_owner, countries, "w.csv"); });
  CHECK(contains(msg, "w.csv:3"));
  CHECK(contains(msg, "owner"));
  CHECK(contains(msg, "XX"));

  const std::string bad_number =
      "cell_id,row,col,lat,lon,owner\n"
      "c0,0,0,seventy,10,RU\n";
  const std::string msg2 = message_of([&] { io::parse_world(bad_number, countries, "w.csv"); });
  CHECK(contains(msg2, "w.csv:2"));
  CHECK(contains(msg2, "lat"));

  const std::string duplicate =
      "cell_id,row,col,lat,lon,owner\n"
      "c0,0,0,70,10,RU\n"
      "c0,0,1,70,12,INTL\n";
  CHECK(contains(message_of([&] { io::parse_world(duplicate, countries, "w.csv"); }),
                 "duplicate cell id"));

  const std::string bad_header = "id,row,col,lat,lon,owner\nc0,0,0,70,10,RU\n";
  CHECK(contains(message_of([&] { io::parse_world(bad_header, countries, "w.csv"); }), "header"));
}

TEST_CASE("parse_layer validates values and cell ids") {
  const auto fx = fixtures::arctic9();

  const ResourceLayer empty = io::parse_layer("cell_id,resource,value\n", fx.world,
                                              ResourceKind::Gas, "gas.csv");
  for (double v : empty.values) CHECK(v == 0.0);

  const ResourceLayer one = io::parse_layer("cell_id,resource,value\nc5,gas,12.5\n", fx.world,
                                            ResourceKind::Gas, "gas.csv");
  CHECK(one.values[5] == 12.5);

  const std::string negative = "cell_id,resource,value\nc5,gas,-1\n";
  const std::string msg =
      message_of([&] { io::parse_layer(negative, fx.world, ResourceKind::Gas, "gas.csv"); });
  CHECK(contains(msg, "gas.csv:2"));
  CHECK(contains(msg, "nonnegative"));

  CHECK(contains(message_of([&] {
                   io::parse_layer("cell_id,resource,value\nzz,gas,1\n", fx.world,
                                   ResourceKind::Gas, "gas.csv");
                 }),
                 "unknown cell"));

  CHECK(contains(message_of([&] {
                   io::parse_layer("cell_id,resource,value\nc5,oil,1\n", fx.world,
                                   ResourceKind::Gas, "gas.csv");
                 }),
                 "resource"));

  // the route column belongs to maritime files only
  CHECK(contains(message_of([&] {
                   io::parse_layer("cell_id,resource,value,route_id\nc5,gas,1,NSR\n", fx.world,
                                   ResourceKind::Gas, "gas.csv");
                 }),
                 "header"));
  CHECK(contains(message_of([&] {
                   io::parse_layer("cell_id,resource,value\nc5,maritime,1\n", fx.world,
                                   ResourceKind::Maritime, "m.csv");
                 }),
                 "header"));
}

TEST_CASE("parse_world rejects absurd row and col indices") {
  const std::vector<Country> countries = {{"RU", CountryKind::Arctic, std::nullopt}};
  const std::string text =
      "cell_id,row,col,lat,lon,owner\n"
      "c0,0,18446744073709551615,70,10,INTL\n";
  CHECK(contains(message_of([&] { io::parse_world(text, countries, "w.csv"); }),
                 "out of range"));
}

TEST_CASE("pgm format matches the single-cell example") {
  GridSpec grid = make_grid(1, 1, {LatLon{70.0, 10.0}});
  ConflictClassField field;
  field.class_count = 6;
  field.classes = {3};
  CHECK(io::write_pgm(grid, field) == "P2\n1 1\n5\n3\n");
}

TEST_CASE("all-zero classes render an all-zero raster") {
  GridSpec grid = make_grid(2, 3, {LatLon{70, 0}, LatLon{70, 2}, LatLon{70, 4}, LatLon{69, 0},
                                   LatLon{69, 2}, LatLon{69, 4}});
  ConflictClassField field;
  field.class_count = 6;
  field.classes.assign(6, 0);
  CHECK(io::write_pgm(grid, field) == "P2\n3 2\n5\n0 0 0\n0 0 0\n");
}

TEST_CASE("geojson export carries one point feature per cell") {
  const auto fx = fixtures::dual_zone();
  const RunResult result = run_scenario(fx.world, fx.layers, fx.config);
  const std::string text = io::write_geojson(fx.world, result.overall);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("type") == "FeatureCollection");
  REQUIRE(doc.at("features").size() == fx.world.cell_count());
  const auto& first = doc.at("features")[0];
  CHECK(first.at("geometry").at("type") == "Point");
  // coordinates are [lon, lat]
  CHECK(first.at("geometry").at("coordinates")[0].get<double>() == 20.0);
  CHECK(first.at("geometry").at("coordinates")[1].get<double>() == 74.5);
  CHECK(first.at("properties").at("owner") == "INTL");
}

TEST_CASE("pgm rasters are row-major with maxval N-1") {
  const auto fx = fixtures::dual_zone();
  const RunResult result = run_scenario(fx.world, fx.layers, fx.config);
  const std::string pgm = io::write_pgm(fx.world.grid(), result.overall);
  CHECK(contains(pgm, "P2\n6 6\n5\n"));
  // one line per grid row after the 3 header lines
  std::size_t newlines = 0;
  for (char ch : pgm) newlines += ch == '\n' ? 1 : 0;
  CHECK(newlines == 3 + fx.world.grid().rows);
}

TEST_CASE("stored runs round-trip through files") {
  const auto fx = fixtures::dual_zone();
  const RunResult result = run_scenario(fx.world, fx.layers, fx.config);
  const std::string prefix = temp_dir() + "/roundtrip";
  io::write_result_files(fx.world, result, prefix);
  const RunResult parsed = io::parse_result_files(fx.world, prefix);
  CHECK(parsed == result);

  // byte determinism of the writers
  const std::string csv1 = io::read_file(prefix + ".csv");
  const std::string pgm1 = io::read_file(prefix + ".pgm");
  io::write_result_files(fx.world, result, prefix);
  CHECK(io::read_file(prefix + ".csv") == csv1);
  CHECK(io::read_file(prefix + ".pgm") == pgm1);
}

TEST_CASE("result csv rejects wrong shapes") {
  const auto fx = fixtures::dual_zone();
  const RunResult result = run_scenario(fx.world, fx.layers, fx.config);
  const std::string text = io::write_result_csv(fx.world, result.overall);

  // drop the last row
  const std::string truncated = text.substr(0, text.rfind("c35"));
  CHECK(contains(message_of([&] { io::parse_result_csv(truncated, fx.world, 6, "r.csv"); }),
                 "cells"));

  CHECK(contains(message_of([&] {
                   io::parse_result_csv("cell_id,row,col,class\nc0,0,0,9\n", fx.world, 6, "r.csv");
                 }),
                 "class"));
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/conflictgrid.csv"), IoError);
  const auto fx = fixtures::dual_zone();
  CHECK_THROWS_AS(io::parse_result_files(fx.world, "/nonexistent/prefix"), IoError);
}

TEST_CASE("parsers survive random mutations of valid files") {
  const auto fx = fixtures::arctic9();
  const std::string countries_text = io::write_countries(fx.world.countries());
  const std::string world_text = io::write_world(fx.world);
  const std::string layer_text = io::write_layer(fx.layers[1], fx.world);
  const std::string config_text = io::write_scenario_json(fx.config);

  std::mt19937 rng(8080);
  auto mutate = [&rng](std::string text) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> pos(0, text.empty() ? 0 : text.size() - 1);
    std::uniform_int_distribution<int> byte(32, 126);
    switch (kind(rng)) {
      case 0:  // overwrite a byte
        if (!text.empty()) text[pos(rng)] = static_cast<char>(byte(rng));
        break;
      case 1:  // delete a byte
        if (!text.empty()) text.erase(pos(rng), 1);
        break;
      case 2:  // duplicate a chunk
        if (!text.empty()) {
          const std::size_t p = pos(rng);
          text.insert(p, text.substr(p, 20));
        }
        break;
      default:  // truncate
        text.resize(pos(rng));
        break;
    }
    return text;
  };

  // Each parse either succeeds or throws ValidationError; nothing else.
  for (int trial = 0; trial < 400; ++trial) {
    try {
      const auto countries = io::parse_countries(mutate(countries_text), "m.csv");
    } catch (const ValidationError&) {
    }
    try {
      io::parse_world(mutate(world_text), fx.world.countries(), "m.csv");
    } catch (const ValidationError&) {
    }
    try {
      io::parse_layer(mutate(layer_text), fx.world, ResourceKind::Gas, "m.csv");
    } catch (const ValidationError&) {
    }
    try {
      io::parse_scenario_json(mutate(config_text), "m.json");
    } catch (const ValidationError&) {
    }
  }
}

TEST_CASE("scenario json defaults are reported and unknown keys rejected") {
  const auto loaded = io::parse_scenario_json("{}", "s.json");
  CHECK(loaded.config == ScenarioConfig{});
  CHECK(loaded.defaulted.size() >= 8);  // every parameter left at default

  const auto partial = io::parse_scenario_json(R"({"grade_count": 4})", "s.json");
  CHECK(partial.config.grade_count == 4);
  for (const std::string& note : partial.defaulted) CHECK(!contains(note, "grade_count"));

  CHECK_THROWS_AS(io::parse_scenario_json(R"({"grade_cnt": 4})", "s.json"), ValidationError);
  CHECK_THROWS_AS(io::parse_scenario_json("{", "s.json"), ValidationError);
  CHECK_THROWS_AS(io::parse_scenario_json(R"({"thresholds": {"mode": "magic"}})", "s.json"),
                  ValidationError);
}

TEST_CASE("scenario json round-trips a full config") {
  const auto fx = fixtures::arctic9();
  ScenarioConfig config = fx.config;
  config.alpha.overrides.push_back(PairOverride{"CN", ResourceKind::Gas, 0.2, true});
  config.decay_km.overrides.push_back(PairOverride{"NO", ResourceKind::Fish, 600.0, false});
  config.quantize_mode = QuantizeMode::Quantile;
  config.step2_weights = {2.0, 1.0, 1.0, 0.5};

  const std::string text = io::write_scenario_json(config);
  const auto loaded = io::parse_scenario_json(text, "s.json");
  CHECK(loaded.config == config);
  CHECK(loaded.defaulted.empty());
  CHECK(io::write_scenario_json(loaded.config) == text);
}

TEST_CASE("scenario json reference thresholds parse") {
  const std::string text = R"({
    "thresholds": {"mode": "reference", "boundaries": [[1,0,0], [4,2,0], [5,5,5]]}
  })";
  const auto loaded = io::parse_scenario_json(text, "s.json");
  CHECK(loaded.config.scheme.mode == ThresholdScheme::Mode::ReferenceVectors);
  CHECK(loaded.config.scheme.class_count() == 4);
}

TEST_CASE("scenario json carries input paths and a sweep list") {
  const std::string text = R"({
    "inputs": {"countries": "c.csv", "world": "w.csv", "oil": "o.csv",
               "gas": "g.csv", "fish": "f.csv", "maritime": "m.csv"},
    "output": {"prefix": "out/run"},
    "sweep": {"alphas": [0.1, 0.8]}
  })";
  const auto loaded = io::parse_scenario_json(text, "s.json");
  CHECK(loaded.paths.countries == "c.csv");
  CHECK(loaded.paths.world == "w.csv");
  CHECK(loaded.paths.layers[0] == "o.csv");
  CHECK(loaded.paths.layers[3] == "m.csv");
  CHECK(loaded.paths.out_prefix == "out/run");
  CHECK(loaded.sweep_alphas == std::vector<double>{0.1, 0.8});
}
