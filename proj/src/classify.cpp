#include "conflictgrid/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

ThresholdScheme ThresholdScheme::quantile(std::size_t classes) {
  if (classes < 2) throw ValidationError("quantile scheme needs at least 2 classes");
  ThresholdScheme scheme;
  scheme.mode = Mode::Quantile;
  scheme.quantile_classes = classes;
  return scheme;
}

ThresholdScheme ThresholdScheme::reference(std::vector<SortedGradeVector> boundaries) {
  if (boundaries.empty()) throw ValidationError("reference scheme needs at least one boundary");
  for (const SortedGradeVector& b : boundaries) {
    if (!std::is_sorted(b.grades.rbegin(), b.grades.rend())) {
      throw ValidationError("reference boundaries must be sorted nonincreasing");
    }
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (compare_intensity(boundaries[i - 1], boundaries[i]) != Ordering::Less) {
      throw ValidationError("reference boundaries must be strictly increasing in intensity");
    }
  }
  ThresholdScheme scheme;
  scheme.mode = Mode::ReferenceVectors;
  scheme.boundaries = std::move(boundaries);
  return scheme;
}

ConflictClassField classify(const CellRanking& ranking, const ThresholdScheme& scheme) {
  const std::size_t total = ranking.cell_count();
  ConflictClassField out;
  out.class_count = scheme.class_count();
  out.classes.assign(total, 0);
  if (out.class_count < 2) throw ValidationError("threshold scheme needs at least 2 classes");

  if (scheme.mode == ThresholdScheme::Mode::Quantile) {
    const auto n = static_cast<double>(out.class_count);
    for (std::size_t cell = 0; cell < total; ++cell) {
      const std::size_t group = ranking.group_of_cell[cell];
      if (all_zero(ranking.vectors[cell])) continue;  // no interest, class 0
      const double mid =
          (static_cast<double>(ranking.group_lo[group]) + static_cast<double>(ranking.group_hi[group])) / 2.0;
      const auto cls = static_cast<int>(std::floor(n * mid / static_cast<double>(total)));
      out.classes[cell] = std::min(cls, static_cast<int>(out.class_count) - 1);
    }
    return out;
  }

  for (std::size_t cell = 0; cell < total; ++cell) {
    int cls = 0;
    for (const SortedGradeVector& boundary : scheme.boundaries) {
      if (compare_intensity(ranking.vectors[cell], boundary) != Ordering::Less) ++cls;
    }
    out.classes[cell] = cls;
  }
  return out;
}

}  // namespace conflictgrid
