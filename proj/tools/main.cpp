#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
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

namespace {

using namespace conflictgrid;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct InputFlags {
  std::string config;
  std::string countries;
  std::string world;
  std::array<std::string, kResourceCount> layers;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("--config", flags.config, "scenario JSON file");
  cmd->add_option("--countries", flags.countries, "countries CSV file");
  cmd->add_option("--world", flags.world, "world CSV file");
  cmd->add_option("--oil", flags.layers[0], "oil layer CSV file");
  cmd->add_option("--gas", flags.layers[1], "gas layer CSV file");
  cmd->add_option("--fish", flags.layers[2], "fish layer CSV file");
  cmd->add_option("--maritime", flags.layers[3], "maritime layer CSV file");
}

struct LoadedInputs {
  World world;
  std::vector<ResourceLayer> layers;
  ScenarioConfig config;
  std::vector<std::string> defaulted;
  std::string out_prefix;            // from the config file, flags may override
  std::vector<double> sweep_alphas;  // likewise
};

// Flags win over config-file paths; everything must resolve to a real file.
LoadedInputs load_inputs(const InputFlags& flags) {
  LoadedInputs in;
  io::ScenarioPaths paths;
  if (!flags.config.empty()) {
    io::LoadedScenario scenario = io::parse_scenario_json(io::read_file(flags.config), flags.config);
    in.config = scenario.config;
    in.defaulted = scenario.defaulted;
    in.sweep_alphas = scenario.sweep_alphas;
    paths = scenario.paths;
  } else {
    in.defaulted.push_back("scenario = built-in defaults (no --config)");
  }

  const std::string countries_path = flags.countries.empty() ? paths.countries : flags.countries;
  const std::string world_path = flags.world.empty() ? paths.world : flags.world;
  if (countries_path.empty()) throw ValidationError("missing countries file (--countries)");
  if (world_path.empty()) throw ValidationError("missing world file (--world)");

  const std::vector<Country> countries =
      io::parse_countries(io::read_file(countries_path), countries_path);
  in.world = io::parse_world(io::read_file(world_path), countries, world_path);

  for (std::size_t r = 0; r < kResourceCount; ++r) {
    const std::string path = flags.layers[r].empty() ? paths.layers[r] : flags.layers[r];
    if (path.empty()) {
      throw ValidationError(std::string("missing layer: ") + resource_name(kAllResources[r]) +
                            " (--" + resource_name(kAllResources[r]) + ")");
    }
    in.layers.push_back(io::parse_layer(io::read_file(path), in.world, kAllResources[r], path));
  }
  in.out_prefix = paths.out_prefix;
  return in;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> alphas;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      alphas.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError("--alphas: '" + item + "' is not a number");
    }
    if (!(alphas.back() >= 0.0 && alphas.back() <= 1.0)) {
      throw ValidationError("--alphas: " + item + " outside [0, 1]");
    }
  }
  if (alphas.empty()) throw ValidationError("--alphas: no values given");
  return alphas;
}

nlohmann::json zone_json(const ZoneDelta& zone) {
  return {{"upgraded", zone.upgraded}, {"downgraded", zone.downgraded}, {"unchanged", zone.unchanged}};
}

nlohmann::json compare_json(const CompareReport& report) {
  nlohmann::json doc;
  doc["upgraded"] = report.upgraded;
  doc["downgraded"] = report.downgraded;
  doc["unchanged"] = report.unchanged;
  doc["eez"] = zone_json(report.eez);
  doc["international"] = zone_json(report.international);
  nlohmann::json per_country = nlohmann::json::array();
  for (const CountryZoneDelta& entry : report.per_country) {
    per_country.push_back({{"country", entry.country},
                           {"own_eez", zone_json(entry.own)},
                           {"foreign_eez", zone_json(entry.foreign)},
                           {"international", zone_json(entry.international)}});
  }
  doc["per_country"] = std::move(per_country);
  return doc;
}

void print_compare(std::ostream& out, const CompareReport& report) {
  out << "cells upgraded: " << report.upgraded << ", downgraded: " << report.downgraded
      << ", unchanged: " << report.unchanged << "\n";
  out << "  EEZ cells:           +" << report.eez.upgraded << " / -" << report.eez.downgraded
      << "\n";
  out << "  international cells: +" << report.international.upgraded << " / -"
      << report.international.downgraded << "\n";
  for (const CountryZoneDelta& entry : report.per_country) {
    out << "  " << entry.country << ": own +" << entry.own.upgraded << "/-"
        << entry.own.downgraded << ", foreign +" << entry.foreign.upgraded << "/-"
        << entry.foreign.downgraded << ", international +" << entry.international.upgraded
        << "/-" << entry.international.downgraded << "\n";
  }
}

int run_validate(const InputFlags& flags) {
  const LoadedInputs in = load_inputs(flags);
  validate_config(in.config, in.world);
  for (const std::string& note : in.defaulted) {
    std::cout << "using default: " << note << "\n";
  }
  std::cout << "world: " << in.world.grid().rows << "x" << in.world.grid().cols << " cells, "
            << in.world.countries().size() << " countries\n";
  std::cout << "OK\n";
  return kExitOk;
}

int run_run(const InputFlags& flags, const std::string& out_flag,
            const std::optional<double>& alpha) {
  LoadedInputs in = load_inputs(flags);
  const std::string prefix = out_flag.empty() ? in.out_prefix : out_flag;
  if (prefix.empty()) throw ValidationError("missing output prefix (--out)");
  ScenarioConfig config = in.config;
  if (alpha) config = with_uniform_alpha(config, *alpha);
  const RunResult result = run_scenario(in.world, in.layers, config);
  io::write_result_files(in.world, result, prefix);
  std::cout << "wrote " << prefix << ".{csv,pgm,summary.json,forecast.*.csv}\n";
  return kExitOk;
}

int run_sweep(const InputFlags& flags, const std::string& out_flag, const std::string& alphas_flag) {
  LoadedInputs in = load_inputs(flags);
  const std::string prefix = out_flag.empty() ? in.out_prefix : out_flag;
  if (prefix.empty()) throw ValidationError("missing output prefix (--out)");
  const std::vector<double> alphas =
      alphas_flag.empty() ? in.sweep_alphas : parse_alpha_list(alphas_flag);
  if (alphas.empty()) throw ValidationError("missing alpha list (--alphas)");

  const auto runs = sweep_alpha(in.world, in.layers, in.config, alphas);
  nlohmann::json sweep = nlohmann::json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& [alpha, result] = runs[i];
    const std::string run_prefix = prefix + ".alpha" + io::format_double(alpha);
    io::write_result_files(in.world, result, run_prefix);

    const TopClassStats stats = top_class_stats(in.world, result);
    nlohmann::json entry;
    entry["alpha"] = alpha;
    entry["prefix"] = run_prefix;
    entry["class_counts"] = result.class_counts;
    entry["top_class"] = stats.top_class;
    entry["top_class_cells"] = stats.cells;
    entry["top_class_eez_share"] = stats.eez_share;
    if (i > 0) {
      entry["delta_from_previous"] = compare_json(compare_runs(in.world, runs[i - 1].second, result));
    }
    sweep.push_back(std::move(entry));
  }
  io::write_file(prefix + ".sweep.json", sweep.dump(2) + "\n");
  std::cout << "wrote " << runs.size() << " runs and " << prefix << ".sweep.json\n";
  return kExitOk;
}

int run_compare(const std::string& countries_path, const std::string& world_path,
                const std::string& a_prefix, const std::string& b_prefix,
                const std::string& out_path) {
  const std::vector<Country> countries =
      io::parse_countries(io::read_file(countries_path), countries_path);
  const World world = io::parse_world(io::read_file(world_path), countries, world_path);
  const RunResult a = io::parse_result_files(world, a_prefix);
  const RunResult b = io::parse_result_files(world, b_prefix);
  const CompareReport report = compare_runs(world, a, b);
  print_compare(std::cout, report);
  if (!out_path.empty()) {
    io::write_file(out_path, compare_json(report).dump(2) + "\n");
  }
  return kExitOk;
}

int run_render(const std::string& countries_path, const std::string& world_path,
               const std::string& result_prefix, const std::string& out_path,
               const std::string& geojson_path, std::size_t classes_flag) {
  const std::vector<Country> countries =
      io::parse_countries(io::read_file(countries_path), countries_path);
  const World world = io::parse_world(io::read_file(world_path), countries, world_path);

  std::size_t class_count = classes_flag;
  if (class_count == 0) {
    const RunResult result = io::parse_result_files(world, result_prefix);
    class_count = result.class_count;
  }
  const ConflictClassField field = io::parse_result_csv(
      io::read_file(result_prefix + ".csv"), world, class_count, result_prefix + ".csv");
  io::write_file(out_path, io::write_pgm(world.grid(), field));
  if (!geojson_path.empty()) {
    io::write_file(geojson_path, io::write_geojson(world, field));
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar conflict-of-interest grid analysis"};
  app.require_subcommand(1);

  InputFlags validate_flags;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check inputs and report defaults");
  add_input_flags(validate_cmd, validate_flags);

  InputFlags run_flags;
  std::string run_out;
  double run_alpha = -1.0;
  CLI::App* run_cmd = app.add_subcommand("run", "run one scenario");
  add_input_flags(run_cmd, run_flags);
  run_cmd->add_option("--out", run_out, "output path prefix");
  CLI::Option* alpha_opt =
      run_cmd->add_option("--alpha", run_alpha, "uniform alpha override for unpinned pairs");

  InputFlags sweep_flags;
  std::string sweep_out;
  std::string sweep_alphas;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a list of alpha values");
  add_input_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--out", sweep_out, "output path prefix");
  sweep_cmd->add_option("--alphas", sweep_alphas, "comma-separated alpha values");

  std::string cmp_countries, cmp_world, cmp_a, cmp_b, cmp_out;
  CLI::App* compare_cmd = app.add_subcommand("compare", "diff two stored runs");
  compare_cmd->add_option("--countries", cmp_countries, "countries CSV file")->required();
  compare_cmd->add_option("--world", cmp_world, "world CSV file")->required();
  compare_cmd->add_option("--a", cmp_a, "first run prefix")->required();
  compare_cmd->add_option("--b", cmp_b, "second run prefix")->required();
  compare_cmd->add_option("--out", cmp_out, "write the delta report as JSON");

  std::string render_countries, render_world, render_result, render_out, render_geojson;
  std::size_t render_classes = 0;
  CLI::App* render_cmd = app.add_subcommand("render", "re-render a stored run as PGM");
  render_cmd->add_option("--countries", render_countries, "countries CSV file")->required();
  render_cmd->add_option("--world", render_world, "world CSV file")->required();
  render_cmd->add_option("--result", render_result, "stored run prefix")->required();
  render_cmd->add_option("--out", render_out, "output PGM path")->required();
  render_cmd->add_option("--geojson", render_geojson, "also write a point-per-cell GeoJSON");
  render_cmd->add_option("--classes", render_classes,
                         "class count when no summary file is present");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(validate_flags);
    if (run_cmd->parsed()) {
      std::optional<double> alpha;
      if (alpha_opt->count() > 0) alpha = run_alpha;
      return run_run(run_flags, run_out, alpha);
    }
    if (sweep_cmd->parsed()) return run_sweep(sweep_flags, sweep_out, sweep_alphas);
    if (compare_cmd->parsed()) return run_compare(cmp_countries, cmp_world, cmp_a, cmp_b, cmp_out);
    if (render_cmd->parsed()) {
      return run_render(render_countries, render_world, render_result, render_out, render_geojson,
                        render_classes);
    }
  } catch (const IoError& err) {
    std::cerr << "io error: " << err.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
