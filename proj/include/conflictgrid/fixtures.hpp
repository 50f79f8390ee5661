#pragma once

#include <cstddef>
#include <vector>

#include "conflictgrid/runner.hpp"

namespace conflictgrid::fixtures {

struct Fixture {
  World world;
  std::vector<ResourceLayer> layers;  // kAllResources order
  ScenarioConfig config;
};

// Synthetic circumpolar world: a 10x18 grid north of 66N with six Arctic
// countries owning sector-shaped EEZ blocks, three non-Arctic countries with
// home-port anchors, and deposit/fish/route layers. One international cell
// between the NO and RU sectors carries by far the largest deposits, so it
// dominates every country's utility scale. This is the data bundled under
// data/arctic9/.
Fixture arctic9();

// Index of the dominant high-deposit international cell of arctic9.
std::size_t arctic9_hotspot_cell();

// Two stacked EEZ blocks plus an international strip, with deposits placed
// so that raising cross-EEZ interest pulls EEZ cells into the top intensity
// class. Exercises the low/high-interest scenario comparison.
Fixture dual_zone();

}  // namespace conflictgrid::fixtures
