#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conflictgrid/aggregate.hpp"
#include "conflictgrid/distance.hpp"
#include "conflictgrid/scenario.hpp"

namespace conflictgrid {

// One cell of the strongest intensity groups: its id, the weighted forecast
// vector that ranked it, and its overall class.
struct Hotspot {
  std::size_t cell = 0;
  std::string cell_id;
  SortedGradeVector vector;
  int conflict_class = 0;

  friend bool operator==(const Hotspot&, const Hotspot&) = default;
};

struct RunResult {
  int grade_count = kDefaultGradeCount;
  std::size_t class_count = 0;
  std::vector<GradeField> forecasts;      // one per resource, kAllResources order
  ConflictClassField overall;
  std::vector<std::size_t> class_counts;  // cells per overall class
  // Cells of the top intensity groups, strongest first, at least top_k unless
  // fewer nonzero cells exist; whole tie groups are always kept together.
  std::vector<Hotspot> hotspots;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Finds the layer of the given kind; throws ValidationError when it is
// missing or supplied twice.
const ResourceLayer& layer_for(const std::vector<ResourceLayer>& layers, ResourceKind kind);

// Full two-step pipeline: distances -> utilities -> grades -> per-resource
// forecasts -> overall classes -> summaries. Pure and deterministic.
RunResult run_scenario(const World& world, const std::vector<ResourceLayer>& layers,
                       const ScenarioConfig& config);

// Same pipeline over precomputed distance fields (declaration order). Lets a
// caller rerun scenarios with relabeled ownership while countries keep their
// geographic positions.
RunResult run_scenario(const World& world, const std::vector<DistanceField>& distances,
                       const std::vector<ResourceLayer>& layers, const ScenarioConfig& config);

// One run per alpha value, each applied uniformly to every unpinned
// (country, resource) pair.
std::vector<std::pair<double, RunResult>> sweep_alpha(const World& world,
                                                      const std::vector<ResourceLayer>& layers,
                                                      const ScenarioConfig& config,
                                                      const std::vector<double>& alphas);

struct ZoneDelta {
  std::size_t upgraded = 0;
  std::size_t downgraded = 0;
  std::size_t unchanged = 0;

  friend bool operator==(const ZoneDelta&, const ZoneDelta&) = default;
};

// Class movement between two runs inside one country's own EEZ, inside the
// other countries' EEZs, and in international waters.
struct CountryZoneDelta {
  std::string country;
  ZoneDelta own;
  ZoneDelta foreign;
  ZoneDelta international;

  friend bool operator==(const CountryZoneDelta&, const CountryZoneDelta&) = default;
};

struct CompareReport {
  std::vector<int> delta;  // class(b) - class(a) per cell
  std::size_t upgraded = 0;
  std::size_t downgraded = 0;
  std::size_t unchanged = 0;
  ZoneDelta eez;            // all owned cells
  ZoneDelta international;  // the rest
  std::vector<CountryZoneDelta> per_country;

  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

// Per-cell class delta between two runs on the same grid, with ownership
// breakdowns. Throws ValidationError on grid mismatch.
CompareReport compare_runs(const World& world, const RunResult& a, const RunResult& b);

struct TopClassStats {
  int top_class = 0;         // highest nonempty class
  std::size_t cells = 0;     // cells in it
  std::size_t eez_cells = 0; // of those, inside some EEZ
  double eez_share = 0.0;
};

TopClassStats top_class_stats(const World& world, const RunResult& result);

}  // namespace conflictgrid
