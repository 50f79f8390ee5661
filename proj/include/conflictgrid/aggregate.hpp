#pragma once

#include <vector>

#include "conflictgrid/classify.hpp"

namespace conflictgrid {

// Step 1: collapse one resource's per-country grade fields into a single
// per-resource forecast. The scheme's class count must equal the grade count
// so the forecast lives on the same scale the overall step consumes.
GradeField aggregate_resource(const std::vector<GradeField>& per_country,
                              const ThresholdScheme& scheme);

// Weighted forecast vector per cell: each forecast grade scaled by its
// resource weight, rounded half-up, clamped to [0, n-1], then sorted.
// Weights must be positive.
std::vector<SortedGradeVector> weighted_forecast_vectors(
    const std::vector<GradeField>& forecasts, const std::vector<double>& weights);

CellRanking overall_ranking(const std::vector<GradeField>& forecasts,
                            const std::vector<double>& weights);

// Step 2: rank cells by the weighted forecast vectors and classify into the
// overall conflict-intensity classes.
ConflictClassField aggregate_overall(const std::vector<GradeField>& forecasts,
                                     const std::vector<double>& weights,
                                     const ThresholdScheme& scheme);

}  // namespace conflictgrid
