#pragma once

#include <cstddef>
#include <vector>

#include "conflictgrid/ranking.hpp"

namespace conflictgrid {

// Thresholds separating intensity classes. Quantile mode cuts the ranked
// cells into N equal-population classes; ReferenceVectors mode counts how
// many explicit boundary vectors a cell reaches.
struct ThresholdScheme {
  enum class Mode { Quantile, ReferenceVectors };

  Mode mode = Mode::Quantile;
  std::size_t quantile_classes = kDefaultGradeCount;  // N, Quantile mode
  std::vector<SortedGradeVector> boundaries;          // strictly increasing, ReferenceVectors

  static ThresholdScheme quantile(std::size_t classes);
  static ThresholdScheme reference(std::vector<SortedGradeVector> boundaries);

  std::size_t class_count() const {
    return mode == Mode::Quantile ? quantile_classes : boundaries.size() + 1;
  }

  friend bool operator==(const ThresholdScheme&, const ThresholdScheme&) = default;
};

// Per-cell intensity class in 0..class_count-1, monotone along the intensity
// order.
struct ConflictClassField {
  std::size_t class_count = 0;  // N
  std::vector<int> classes;

  friend bool operator==(const ConflictClassField&, const ConflictClassField&) = default;
};

// Quantile mode assigns each equivalence group the class of its rank-range
// midpoint, so ties never straddle a class boundary; all-zero vectors are
// pinned to class 0. ReferenceVectors mode assigns the number of boundaries
// the cell's vector equals or exceeds. Upper classes may come out empty.
ConflictClassField classify(const CellRanking& ranking, const ThresholdScheme& scheme);

}  // namespace conflictgrid
