#include <doctest.h>

#include <random>

#include "conflictgrid/errors.hpp"
#include "conflictgrid/fixtures.hpp"
#include "conflictgrid/runner.hpp"
#include "conflictgrid/utility.hpp"

using namespace conflictgrid;

namespace {

World small_world() {
  std::vector<LatLon> centers;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      centers.push_back(LatLon{74.0 - static_cast<double>(r), 20.0 + 2.0 * static_cast<double>(c)});
    }
  }
  return build_world(make_grid(3, 3, std::move(centers)),
                     {{"RU", CountryKind::Arctic, std::nullopt}},
                     {"RU", "RU", "INTL", "INTL", "INTL", "INTL", "INTL", "INTL", "INTL"});
}

std::vector<ResourceLayer> zero_layers(const World& world) {
  std::vector<ResourceLayer> layers;
  for (ResourceKind kind : kAllResources) layers.push_back(zero_layer(kind, world));
  return layers;
}

ScenarioConfig basic_config() {
  ScenarioConfig config;
  config.scheme = ThresholdScheme::quantile(6);
  return config;
}

}  // namespace

TEST_CASE("arctic9 fixture shape: nine countries, six with Arctic-water EEZs") {
  const auto fx = fixtures::arctic9();
  CHECK(fx.world.countries().size() == 9);
  std::size_t arctic = 0;
  for (const Country& c : fx.world.countries()) {
    if (c.kind == CountryKind::Arctic) {
      ++arctic;
      CHECK(!fx.world.owned_cells(fx.world.country_index(c.code)).empty());
    } else {
      CHECK(c.anchor.has_value());
      CHECK(fx.world.owned_cells(fx.world.country_index(c.code)).empty());
    }
  }
  CHECK(arctic == 6);
}

TEST_CASE("layer_for finds each resource exactly once") {
  const World world = small_world();
  auto layers = zero_layers(world);
  CHECK(layer_for(layers, ResourceKind::Fish).resource == ResourceKind::Fish);
  layers.pop_back();
  CHECK_THROWS_WITH_AS(layer_for(layers, ResourceKind::Maritime), "missing layer: maritime",
                       ValidationError);
  layers.push_back(zero_layer(ResourceKind::Oil, world));
  CHECK_THROWS_WITH_AS(layer_for(layers, ResourceKind::Oil), "duplicate layer: oil",
                       ValidationError);
}

TEST_CASE("run_scenario on all-zero layers yields zero classes and no hotspots") {
  const World world = small_world();
  const RunResult result = run_scenario(world, zero_layers(world), basic_config());
  for (int cls : result.overall.classes) CHECK(cls == 0);
  CHECK(result.hotspots.empty());
  CHECK(result.class_counts[0] == world.cell_count());
  for (const GradeField& f : result.forecasts) {
    for (int g : f.grades) CHECK(g == 0);
  }
}

TEST_CASE("run_scenario: a single deposit cell is the unique top hotspot") {
  const World world = small_world();
  auto layers = zero_layers(world);
  layers[1].values[4] = 10.0;  // gas at the international center
  const RunResult result = run_scenario(world, layers, basic_config());

  const TopClassStats stats = top_class_stats(world, result);
  CHECK(stats.top_class == result.overall.classes[4]);
  CHECK(stats.cells == 1);
  REQUIRE(!result.hotspots.empty());
  CHECK(result.hotspots.front().cell == 4);
  for (std::size_t cell = 0; cell < 9; ++cell) {
    if (cell != 4) CHECK(result.overall.classes[cell] < result.overall.classes[4]);
  }
}

TEST_CASE("run_scenario is reproducible") {
  const auto fx = fixtures::arctic9();
  const RunResult a = run_scenario(fx.world, fx.layers, fx.config);
  const RunResult b = run_scenario(fx.world, fx.layers, fx.config);
  CHECK(a == b);
}

TEST_CASE("class counts sum to the cell count") {
  const auto fx = fixtures::arctic9();
  const RunResult result = run_scenario(fx.world, fx.layers, fx.config);
  std::size_t total = 0;
  for (std::size_t count : result.class_counts) total += count;
  CHECK(total == fx.world.cell_count());
}

TEST_CASE("hotspot list keeps whole tie groups and at least top_k entries") {
  const auto fx = fixtures::arctic9();
  ScenarioConfig config = fx.config;
  config.top_k = 3;
  const RunResult result = run_scenario(fx.world, fx.layers, config);
  CHECK(result.hotspots.size() >= 3);
  // list is ordered strongest first, and any trailing tie is fully included
  for (std::size_t i = 1; i < result.hotspots.size(); ++i) {
    CHECK(compare_intensity(result.hotspots[i - 1].vector, result.hotspots[i].vector) !=
          Ordering::Less);
  }
  // rerun with a bigger k: the leading entries must be identical
  ScenarioConfig wide = fx.config;
  wide.top_k = 20;
  const RunResult more = run_scenario(fx.world, fx.layers, wide);
  REQUIRE(more.hotspots.size() >= result.hotspots.size());
  for (std::size_t i = 0; i < result.hotspots.size(); ++i) {
    CHECK(more.hotspots[i] == result.hotspots[i]);
  }
}

TEST_CASE("zero alpha isolates every country from foreign EEZs") {
  const auto fx = fixtures::arctic9();
  const auto distances = compute_distance_fields(fx.world);
  const ScenarioConfig config = with_uniform_alpha(fx.config, 0.0);

  MaritimeParams maritime;
  maritime.base_utility = config.maritime_base;
  maritime.decay = make_decay(config.decay_km.fallback);
  maritime.importance = config.importance;

  for (std::size_t ci = 0; ci < fx.world.countries().size(); ++ci) {
    const Country& country = fx.world.countries()[ci];
    for (ResourceKind kind : kAllResources) {
      const ResourceLayer& layer = layer_for(fx.layers, kind);
      const UtilityField u =
          kind == ResourceKind::Maritime
              ? maritime_utility(fx.world, distances[ci], layer, country, maritime, 0.0)
              : deposit_utility(fx.world, distances[ci], layer, country.code,
                                make_decay(config.decay_km.fallback), 0.0);
      const GradeField g = quantize(u, config.grade_count, config.quantize_mode, 1.0);
      for (std::size_t cell = 0; cell < fx.world.cell_count(); ++cell) {
        if (fx.world.zone(cell, static_cast<int>(ci)) == CellZone::Foreign) {
          CHECK(u.values[cell] == 0.0);
          CHECK(g.grades[cell] == 0);
        }
      }
    }
  }
}

TEST_CASE("alpha = 1 equals the all-international relabeling, distances kept") {
  const auto fx = fixtures::arctic9();
  const auto distances = compute_distance_fields(fx.world);

  const World relabeled =
      build_world(fx.world.grid(), fx.world.countries(),
                  std::vector<std::string>(fx.world.cell_count(), "INTL"));

  const ScenarioConfig config = with_uniform_alpha(fx.config, 1.0);
  const RunResult a = run_scenario(fx.world, distances, fx.layers, config);
  const RunResult b = run_scenario(relabeled, distances, fx.layers, config);
  CHECK(a.overall == b.overall);
  CHECK(a == b);
}

TEST_CASE("sweep_alpha: dual-zone EEZ share of the top class rises with alpha") {
  const auto fx = fixtures::dual_zone();
  const auto runs = sweep_alpha(fx.world, fx.layers, fx.config, {0.1, 0.8});
  const double low = top_class_stats(fx.world, runs[0].second).eez_share;
  const double high = top_class_stats(fx.world, runs[1].second).eez_share;
  CHECK(high >= low);
  CHECK(high > low);  // this fixture moves strictly
}

TEST_CASE("sweep_alpha validates the alpha range and pins pinned overrides") {
  const auto fx = fixtures::dual_zone();
  CHECK_THROWS_AS(sweep_alpha(fx.world, fx.layers, fx.config, {1.5}), ValidationError);

  ScenarioConfig config = fx.config;
  config.alpha.overrides.push_back(PairOverride{"AA", ResourceKind::Gas, 0.0, true});
  config.alpha.overrides.push_back(PairOverride{"BB", ResourceKind::Gas, 0.0, false});
  const ScenarioConfig swept = with_uniform_alpha(config, 0.7);
  CHECK(swept.alpha.fallback == 0.7);
  REQUIRE(swept.alpha.overrides.size() == 1);
  CHECK(swept.alpha.overrides[0].country == "AA");
  CHECK(swept.alpha.value_for("AA", ResourceKind::Gas) == 0.0);
  CHECK(swept.alpha.value_for("BB", ResourceKind::Gas) == 0.7);
}

TEST_CASE("compare_runs on identical runs is all zeros") {
  const auto fx = fixtures::dual_zone();
  const RunResult r = run_scenario(fx.world, fx.layers, fx.config);
  const CompareReport report = compare_runs(fx.world, r, r);
  CHECK(report.upgraded == 0);
  CHECK(report.downgraded == 0);
  CHECK(report.unchanged == fx.world.cell_count());
  for (int d : report.delta) CHECK(d == 0);
}

TEST_CASE("compare_runs counts a single upgraded cell") {
  const auto fx = fixtures::dual_zone();
  const RunResult r = run_scenario(fx.world, fx.layers, fx.config);
  RunResult bumped = r;
  const std::size_t target = 0;  // international corner cell
  bumped.overall.classes[target] += 1;
  const CompareReport report = compare_runs(fx.world, r, bumped);
  CHECK(report.upgraded == 1);
  CHECK(report.downgraded == 0);
  CHECK(report.delta[target] == 1);
  CHECK(report.international.upgraded == 1);
  CHECK(report.eez.upgraded == 0);
  // per-country view: both countries see it as an international upgrade
  for (const CountryZoneDelta& entry : report.per_country) {
    CHECK(entry.international.upgraded == 1);
    CHECK(entry.own.upgraded == 0);
    CHECK(entry.foreign.upgraded == 0);
  }
}

TEST_CASE("compare_runs rejects mismatched grids") {
  const auto fx = fixtures::dual_zone();
  const RunResult r = run_scenario(fx.world, fx.layers, fx.config);
  const World other = small_world();
  CHECK_THROWS_AS(compare_runs(other, r, r), ValidationError);
}

TEST_CASE("validate_config rejects out-of-range parameters") {
  const auto fx = fixtures::arctic9();
  ScenarioConfig config = fx.config;
  config.alpha.fallback = 1.2;
  CHECK_THROWS_AS(validate_config(config, fx.world), ValidationError);

  config = fx.config;
  config.step2_weights[1] = 0.0;
  CHECK_THROWS_AS(validate_config(config, fx.world), ValidationError);

  config = fx.config;
  config.importance.erase("CN");
  CHECK_THROWS_AS(validate_config(config, fx.world), ValidationError);

  config = fx.config;
  config.importance["CN"] = 1.5;
  CHECK_THROWS_AS(validate_config(config, fx.world), ValidationError);

  config = fx.config;
  config.decay_km.overrides.push_back(PairOverride{"ZZ", ResourceKind::Oil, 500.0, false});
  CHECK_THROWS_AS(validate_config(config, fx.world), ValidationError);

  config = fx.config;
  config.grade_count = 1;
  CHECK_THROWS_AS(validate_config(config, fx.world), ValidationError);

  CHECK_NOTHROW(validate_config(fx.config, fx.world));
}
