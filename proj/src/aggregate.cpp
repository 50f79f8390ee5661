#include "conflictgrid/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

GradeField aggregate_resource(const std::vector<GradeField>& per_country,
                              const ThresholdScheme& scheme) {
  if (per_country.empty()) throw ValidationError("resource aggregation needs grade fields");
  const int n = per_country.front().grade_count;
  if (scheme.class_count() != static_cast<std::size_t>(n)) {
    throw ValidationError("forecast class count " + std::to_string(scheme.class_count()) +
                          " must equal the grade count " + std::to_string(n));
  }
  for (const GradeField& f : per_country) {
    if (f.resource != per_country.front().resource) {
      throw ValidationError("resource aggregation got mixed resources");
    }
  }

  const CellRanking ranking = rank_cells(per_country);
  const ConflictClassField classes = classify(ranking, scheme);

  GradeField forecast;
  forecast.label = "forecast";
  forecast.resource = per_country.front().resource;
  forecast.grade_count = n;
  forecast.grades = classes.classes;
  return forecast;
}

std::vector<SortedGradeVector> weighted_forecast_vectors(const std::vector<GradeField>& forecasts,
                                                         const std::vector<double>& weights) {
  if (forecasts.empty()) throw ValidationError("overall aggregation needs forecasts");
  if (weights.size() != forecasts.size()) {
    throw ValidationError("got " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(forecasts.size()) + " forecasts");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw ValidationError("resource weight must be positive");
  }
  const std::size_t cells = forecasts.front().grades.size();
  const int n = forecasts.front().grade_count;
  for (const GradeField& f : forecasts) {
    if (f.grades.size() != cells) throw ValidationError("forecasts do not share one grid");
    if (f.grade_count != n) throw ValidationError("forecasts do not share one grade scale");
  }

  std::vector<SortedGradeVector> vectors;
  vectors.reserve(cells);
  GradeVector scratch(forecasts.size());
  for (std::size_t cell = 0; cell < cells; ++cell) {
    for (std::size_t r = 0; r < forecasts.size(); ++r) {
      // Scale, round half-up, clamp back onto the grade scale.
      const double scaled = weights[r] * forecasts[r].grades[cell];
      scratch[r] = std::clamp(static_cast<int>(std::floor(scaled + 0.5)), 0, n - 1);
    }
    vectors.push_back(sort_desc(scratch));
  }
  return vectors;
}

CellRanking overall_ranking(const std::vector<GradeField>& forecasts,
                            const std::vector<double>& weights) {
  return rank_vectors(weighted_forecast_vectors(forecasts, weights));
}

ConflictClassField aggregate_overall(const std::vector<GradeField>& forecasts,
                                     const std::vector<double>& weights,
                                     const ThresholdScheme& scheme) {
  return classify(overall_ranking(forecasts, weights), scheme);
}

}  // namespace conflictgrid
