#include "conflictgrid/runner.hpp"

#include <algorithm>
#include <string>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/utility.hpp"

namespace conflictgrid {

const ResourceLayer& layer_for(const std::vector<ResourceLayer>& layers, ResourceKind kind) {
  const ResourceLayer* found = nullptr;
  for (const ResourceLayer& layer : layers) {
    if (layer.resource != kind) continue;
    if (found) {
      throw ValidationError(std::string("duplicate layer: ") + resource_name(kind));
    }
    found = &layer;
  }
  if (!found) {
    throw ValidationError(std::string("missing layer: ") + resource_name(kind));
  }
  return *found;
}

namespace {

std::vector<Hotspot> collect_hotspots(const World& world, const CellRanking& ranking,
                                      const ConflictClassField& classes, int top_k) {
  // Walk groups strongest first, keeping whole tie groups, until top_k cells
  // are listed. Cells with no interest at all never qualify.
  std::vector<Hotspot> hotspots;
  if (ranking.group_count == 0) return hotspots;

  std::vector<std::vector<std::size_t>> cells_by_group(ranking.group_count);
  for (std::size_t cell = 0; cell < ranking.cell_count(); ++cell) {
    cells_by_group[ranking.group_of_cell[cell]].push_back(cell);
  }

  for (std::size_t g = ranking.group_count; g-- > 0;) {
    const auto& members = cells_by_group[g];
    if (all_zero(ranking.vectors[members.front()])) break;
    for (std::size_t cell : members) {
      hotspots.push_back(Hotspot{cell, world.grid().cell_ids[cell], ranking.vectors[cell],
                                 classes.classes[cell]});
    }
    if (hotspots.size() >= static_cast<std::size_t>(top_k)) break;
  }
  return hotspots;
}

}  // namespace

RunResult run_scenario(const World& world, const std::vector<DistanceField>& distances,
                       const std::vector<ResourceLayer>& layers, const ScenarioConfig& config) {
  validate_config(config, world);
  if (distances.size() != world.countries().size()) {
    throw ValidationError("need one distance field per declared country");
  }
  for (ResourceKind kind : kAllResources) {
    validate_layer(layer_for(layers, kind), world);
  }

  const int n = config.grade_count;
  MaritimeParams maritime;
  maritime.base_utility = config.maritime_base;
  maritime.importance = config.importance;

  RunResult result;
  result.grade_count = n;
  result.forecasts.reserve(kResourceCount);

  for (std::size_t r = 0; r < kResourceCount; ++r) {
    const ResourceKind kind = kAllResources[r];
    const ResourceLayer& layer = layer_for(layers, kind);
    std::vector<GradeField> grades;
    grades.reserve(world.countries().size());
    for (std::size_t ci = 0; ci < world.countries().size(); ++ci) {
      const Country& country = world.countries()[ci];
      const double alpha = config.alpha.value_for(country.code, kind);
      const DecayFunction decay = make_decay(config.decay_km.value_for(country.code, kind));
      UtilityField utility;
      if (kind == ResourceKind::Maritime) {
        maritime.decay = decay;
        utility = maritime_utility(world, distances[ci], layer, country, maritime, alpha);
      } else {
        utility = deposit_utility(world, distances[ci], layer, country.code, decay, alpha);
      }
      grades.push_back(quantize(utility, n, config.quantize_mode, config.step1_weights[r]));
    }
    result.forecasts.push_back(
        aggregate_resource(grades, ThresholdScheme::quantile(static_cast<std::size_t>(n))));
  }

  const std::vector<double> step2(config.step2_weights.begin(), config.step2_weights.end());
  const CellRanking ranking = overall_ranking(result.forecasts, step2);
  result.overall = classify(ranking, config.scheme);
  result.class_count = result.overall.class_count;

  result.class_counts.assign(result.class_count, 0);
  for (int cls : result.overall.classes) {
    ++result.class_counts[static_cast<std::size_t>(cls)];
  }
  result.hotspots = collect_hotspots(world, ranking, result.overall, config.top_k);
  return result;
}

RunResult run_scenario(const World& world, const std::vector<ResourceLayer>& layers,
                       const ScenarioConfig& config) {
  return run_scenario(world, compute_distance_fields(world), layers, config);
}

std::vector<std::pair<double, RunResult>> sweep_alpha(const World& world,
                                                      const std::vector<ResourceLayer>& layers,
                                                      const ScenarioConfig& config,
                                                      const std::vector<double>& alphas) {
  const std::vector<DistanceField> distances = compute_distance_fields(world);
  std::vector<std::pair<double, RunResult>> runs;
  runs.reserve(alphas.size());
  for (double alpha : alphas) {
    runs.emplace_back(alpha,
                      run_scenario(world, distances, layers, with_uniform_alpha(config, alpha)));
  }
  return runs;
}

CompareReport compare_runs(const World& world, const RunResult& a, const RunResult& b) {
  const std::size_t cells = world.cell_count();
  if (a.overall.classes.size() != cells || b.overall.classes.size() != cells) {
    throw ValidationError("results do not match the world's grid");
  }

  CompareReport report;
  report.delta.resize(cells);
  report.per_country.reserve(world.countries().size());
  for (const Country& c : world.countries()) {
    report.per_country.push_back(CountryZoneDelta{c.code, {}, {}, {}});
  }

  auto bump = [](ZoneDelta& zone, int delta) {
    if (delta > 0) {
      ++zone.upgraded;
    } else if (delta < 0) {
      ++zone.downgraded;
    } else {
      ++zone.unchanged;
    }
  };

  for (std::size_t cell = 0; cell < cells; ++cell) {
    const int delta = b.overall.classes[cell] - a.overall.classes[cell];
    report.delta[cell] = delta;
    if (delta > 0) ++report.upgraded;
    if (delta < 0) ++report.downgraded;
    if (delta == 0) ++report.unchanged;
    bump(world.international(cell) ? report.international : report.eez, delta);
    for (std::size_t ci = 0; ci < world.countries().size(); ++ci) {
      CountryZoneDelta& entry = report.per_country[ci];
      switch (world.zone(cell, static_cast<int>(ci))) {
        case CellZone::Own: bump(entry.own, delta); break;
        case CellZone::Foreign: bump(entry.foreign, delta); break;
        case CellZone::International: bump(entry.international, delta); break;
      }
    }
  }
  return report;
}

TopClassStats top_class_stats(const World& world, const RunResult& result) {
  TopClassStats stats;
  for (std::size_t cls = result.class_counts.size(); cls-- > 0;) {
    if (result.class_counts[cls] > 0) {
      stats.top_class = static_cast<int>(cls);
      break;
    }
  }
  for (std::size_t cell = 0; cell < result.overall.classes.size(); ++cell) {
    if (result.overall.classes[cell] != stats.top_class) continue;
    ++stats.cells;
    if (!world.international(cell)) ++stats.eez_cells;
  }
  if (stats.cells > 0) {
    stats.eez_share = static_cast<double>(stats.eez_cells) / static_cast<double>(stats.cells);
  }
  return stats;
}

}  // namespace conflictgrid
