#include "conflictgrid/io/config_io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/io/csv.hpp"

namespace conflictgrid::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& file, const std::string& message) {
  throw ValidationError(file + ": " + message);
}

void require_keys(const json& object, const std::set<std::string>& known,
                  const std::string& where, const std::string& file) {
  for (const auto& item : object.items()) {
    if (!known.count(item.key())) {
      fail(file, "unknown key '" + item.key() + "' in " + where);
    }
  }
}

double number_at(const json& object, const char* key, const std::string& where,
                 const std::string& file) {
  const auto& value = object.at(key);
  if (!value.is_number()) fail(file, where + "." + key + " must be a number");
  return value.get<double>();
}

PairParam parse_pair_param(const json& value, const char* name, double fallback,
                           const std::string& file, std::vector<std::string>& defaulted) {
  PairParam param{fallback, {}};
  if (value.is_number()) {
    param.fallback = value.get<double>();
    return param;
  }
  if (!value.is_object()) fail(file, std::string(name) + " must be a number or an object");
  require_keys(value, {"default", "overrides"}, name, file);
  if (value.contains("default")) {
    param.fallback = number_at(value, "default", name, file);
  } else {
    defaulted.push_back(std::string(name) + ".default = " + format_double(fallback));
  }
  if (value.contains("overrides")) {
    const auto& overrides = value.at("overrides");
    if (!overrides.is_array()) fail(file, std::string(name) + ".overrides must be an array");
    for (const auto& entry : overrides) {
      if (!entry.is_object()) fail(file, std::string(name) + ".overrides entries must be objects");
      require_keys(entry, {"country", "resource", "value", "pinned"},
                   std::string(name) + ".overrides", file);
      PairOverride o;
      o.country = entry.at("country").get<std::string>();
      const std::string resource = entry.at("resource").get<std::string>();
      const auto kind = resource_from_name(resource);
      if (!kind) fail(file, std::string(name) + " override names unknown resource '" + resource + "'");
      o.resource = *kind;
      o.value = number_at(entry, "value", std::string(name) + ".overrides", file);
      if (entry.contains("pinned")) o.pinned = entry.at("pinned").get<bool>();
      param.overrides.push_back(std::move(o));
    }
  }
  return param;
}

std::array<double, kResourceCount> parse_weights(const json& value, const char* name,
                                                 const std::string& file) {
  if (!value.is_object()) fail(file, std::string(name) + " must be an object");
  std::set<std::string> known;
  for (ResourceKind kind : kAllResources) known.insert(resource_name(kind));
  require_keys(value, known, name, file);
  std::array<double, kResourceCount> weights;
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    const char* resource = resource_name(kAllResources[r]);
    if (!value.contains(resource)) {
      fail(file, std::string(name) + " is missing '" + resource + "'");
    }
    weights[r] = number_at(value, resource, name, file);
  }
  return weights;
}

std::string weights_note(const std::array<double, kResourceCount>& weights) {
  std::ostringstream out;
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    if (r > 0) out << ',';
    out << resource_name(kAllResources[r]) << '=' << format_double(weights[r]);
  }
  return out.str();
}

ThresholdScheme parse_thresholds(const json& value, const std::string& file) {
  if (!value.is_object()) fail(file, "thresholds must be an object");
  require_keys(value, {"mode", "classes", "boundaries"}, "thresholds", file);
  const std::string mode = value.at("mode").get<std::string>();
  if (mode == "quantile") {
    std::size_t classes = kDefaultGradeCount;
    if (value.contains("classes")) classes = value.at("classes").get<std::size_t>();
    return ThresholdScheme::quantile(classes);
  }
  if (mode == "reference") {
    if (!value.contains("boundaries")) fail(file, "reference thresholds need 'boundaries'");
    std::vector<SortedGradeVector> boundaries;
    for (const auto& entry : value.at("boundaries")) {
      SortedGradeVector b;
      b.grades = entry.get<std::vector<int>>();
      for (std::size_t i = 1; i < b.grades.size(); ++i) {
        if (b.grades[i - 1] < b.grades[i]) {
          fail(file, "threshold boundaries must be sorted nonincreasing");
        }
      }
      boundaries.push_back(std::move(b));
    }
    return ThresholdScheme::reference(std::move(boundaries));
  }
  fail(file, "thresholds.mode must be 'quantile' or 'reference'");
}

json pair_param_json(const PairParam& param) {
  json overrides = json::array();
  for (const PairOverride& o : param.overrides) {
    json entry;
    entry["country"] = o.country;
    entry["resource"] = resource_name(o.resource);
    entry["value"] = o.value;
    entry["pinned"] = o.pinned;
    overrides.push_back(std::move(entry));
  }
  json out;
  out["default"] = param.fallback;
  out["overrides"] = std::move(overrides);
  return out;
}

json weights_json(const std::array<double, kResourceCount>& weights) {
  json out;
  for (std::size_t r = 0; r < kResourceCount; ++r) {
    out[resource_name(kAllResources[r])] = weights[r];
  }
  return out;
}

}  // namespace

LoadedScenario parse_scenario_json(const std::string& text, const std::string& file_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ValidationError(file_name + ": " + err.what());
  }
  if (!doc.is_object()) fail(file_name, "scenario must be a JSON object");

  LoadedScenario loaded;
  ScenarioConfig& config = loaded.config;
  auto& defaulted = loaded.defaulted;

  try {
    require_keys(doc,
                 {"grade_count", "quantize_mode", "alpha", "decay_km", "maritime",
                  "step1_weights", "step2_weights", "thresholds", "top_k", "inputs", "output",
                  "sweep"},
                 "scenario", file_name);

    if (doc.contains("grade_count")) {
      config.grade_count = doc.at("grade_count").get<int>();
    } else {
      defaulted.push_back("grade_count = " + std::to_string(config.grade_count));
    }

    if (doc.contains("quantize_mode")) {
      const std::string mode = doc.at("quantize_mode").get<std::string>();
      if (mode == "linear") {
        config.quantize_mode = QuantizeMode::Linear;
      } else if (mode == "quantile") {
        config.quantize_mode = QuantizeMode::Quantile;
      } else {
        fail(file_name, "quantize_mode must be 'linear' or 'quantile'");
      }
    } else {
      defaulted.push_back(std::string("quantize_mode = ") +
                          quantize_mode_name(config.quantize_mode));
    }

    if (doc.contains("alpha")) {
      config.alpha = parse_pair_param(doc.at("alpha"), "alpha", kDefaultAlpha, file_name, defaulted);
    } else {
      defaulted.push_back("alpha.default = " + format_double(kDefaultAlpha));
    }

    if (doc.contains("decay_km")) {
      config.decay_km =
          parse_pair_param(doc.at("decay_km"), "decay_km", kDefaultDecayKm, file_name, defaulted);
    } else {
      defaulted.push_back("decay_km.default = " + format_double(kDefaultDecayKm));
    }

    if (doc.contains("maritime")) {
      const json& maritime = doc.at("maritime");
      if (!maritime.is_object()) fail(file_name, "maritime must be an object");
      require_keys(maritime, {"base_utility", "importance"}, "maritime", file_name);
      if (maritime.contains("base_utility")) {
        config.maritime_base = number_at(maritime, "base_utility", "maritime", file_name);
      } else {
        defaulted.push_back("maritime.base_utility = " + format_double(config.maritime_base));
      }
      if (maritime.contains("importance")) {
        const json& importance = maritime.at("importance");
        if (!importance.is_object()) fail(file_name, "maritime.importance must be an object");
        for (const auto& item : importance.items()) {
          if (!item.value().is_number()) {
            fail(file_name, "maritime.importance values must be numbers");
          }
          config.importance[item.key()] = item.value().get<double>();
        }
      } else {
        defaulted.push_back("maritime.importance = (none)");
      }
    } else {
      defaulted.push_back("maritime.base_utility = " + format_double(config.maritime_base));
      defaulted.push_back("maritime.importance = (none)");
    }

    if (doc.contains("step1_weights")) {
      config.step1_weights = parse_weights(doc.at("step1_weights"), "step1_weights", file_name);
    } else {
      defaulted.push_back("step1_weights = " + weights_note(config.step1_weights));
    }
    if (doc.contains("step2_weights")) {
      config.step2_weights = parse_weights(doc.at("step2_weights"), "step2_weights", file_name);
    } else {
      defaulted.push_back("step2_weights = " + weights_note(config.step2_weights));
    }

    if (doc.contains("thresholds")) {
      config.scheme = parse_thresholds(doc.at("thresholds"), file_name);
    } else {
      defaulted.push_back("thresholds = quantile, classes=" +
                          std::to_string(config.scheme.class_count()));
    }

    if (doc.contains("top_k")) {
      config.top_k = doc.at("top_k").get<int>();
    } else {
      defaulted.push_back("top_k = " + std::to_string(config.top_k));
    }

    if (doc.contains("inputs")) {
      const json& inputs = doc.at("inputs");
      if (!inputs.is_object()) fail(file_name, "inputs must be an object");
      std::set<std::string> known = {"countries", "world"};
      for (ResourceKind kind : kAllResources) known.insert(resource_name(kind));
      require_keys(inputs, known, "inputs", file_name);
      if (inputs.contains("countries")) {
        loaded.paths.countries = inputs.at("countries").get<std::string>();
      }
      if (inputs.contains("world")) loaded.paths.world = inputs.at("world").get<std::string>();
      for (std::size_t r = 0; r < kResourceCount; ++r) {
        const char* resource = resource_name(kAllResources[r]);
        if (inputs.contains(resource)) {
          loaded.paths.layers[r] = inputs.at(resource).get<std::string>();
        }
      }
    }

    if (doc.contains("output")) {
      const json& output = doc.at("output");
      if (!output.is_object()) fail(file_name, "output must be an object");
      require_keys(output, {"prefix"}, "output", file_name);
      if (output.contains("prefix")) {
        loaded.paths.out_prefix = output.at("prefix").get<std::string>();
      }
    }

    if (doc.contains("sweep")) {
      const json& sweep = doc.at("sweep");
      if (!sweep.is_object()) fail(file_name, "sweep must be an object");
      require_keys(sweep, {"alphas"}, "sweep", file_name);
      if (sweep.contains("alphas")) {
        loaded.sweep_alphas = sweep.at("alphas").get<std::vector<double>>();
      }
    }
  } catch (const json::exception& err) {
    throw ValidationError(file_name + ": " + err.what());
  }
  return loaded;
}

std::string write_scenario_json(const ScenarioConfig& config) {
  json doc;
  doc["grade_count"] = config.grade_count;
  doc["quantize_mode"] = quantize_mode_name(config.quantize_mode);
  doc["alpha"] = pair_param_json(config.alpha);
  doc["decay_km"] = pair_param_json(config.decay_km);
  doc["maritime"]["base_utility"] = config.maritime_base;
  doc["maritime"]["importance"] = json::object();
  for (const auto& [code, value] : config.importance) {
    doc["maritime"]["importance"][code] = value;
  }
  doc["step1_weights"] = weights_json(config.step1_weights);
  doc["step2_weights"] = weights_json(config.step2_weights);
  if (config.scheme.mode == ThresholdScheme::Mode::Quantile) {
    doc["thresholds"]["mode"] = "quantile";
    doc["thresholds"]["classes"] = config.scheme.quantile_classes;
  } else {
    doc["thresholds"]["mode"] = "reference";
    json boundaries = json::array();
    for (const SortedGradeVector& b : config.scheme.boundaries) boundaries.push_back(b.grades);
    doc["thresholds"]["boundaries"] = std::move(boundaries);
  }
  doc["top_k"] = config.top_k;
  return doc.dump(2) + "\n";
}

}  // namespace conflictgrid::io
