#include "conflictgrid/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

const char* quantize_mode_name(QuantizeMode mode) {
  return mode == QuantizeMode::Linear ? "linear" : "quantile";
}

GradeField quantize(const UtilityField& field, int grade_count, QuantizeMode mode, double weight) {
  if (grade_count < 2) {
    throw ValidationError("grade count must be at least 2, got " + std::to_string(grade_count));
  }
  if (!(weight > 0.0)) {
    throw ValidationError("quantize weight must be positive, got " + std::to_string(weight));
  }

  GradeField out;
  out.label = field.country;
  out.resource = field.resource;
  out.grade_count = grade_count;
  out.grades.assign(field.values.size(), 0);

  for (double v : field.values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("utility values must be finite and nonnegative");
    }
  }

  if (mode == QuantizeMode::Linear) {
    double max_wu = 0.0;
    for (double v : field.values) max_wu = std::max(max_wu, weight * v);
    if (max_wu <= 0.0) return out;  // identically zero field
    const double denom = max_wu * (1.0 + 1e-9);
    for (std::size_t cell = 0; cell < field.values.size(); ++cell) {
      const double v = field.values[cell];
      if (v <= 0.0) continue;
      const int grade = static_cast<int>(std::floor(grade_count * (weight * v) / denom));
      out.grades[cell] = std::clamp(grade, 0, grade_count - 1);
    }
    return out;
  }

  // Quantile mode: rank-based, so the weight cancels entirely.
  std::vector<double> positives;
  positives.reserve(field.values.size());
  for (double v : field.values) {
    if (v > 0.0) positives.push_back(v);
  }
  if (positives.empty()) return out;
  std::sort(positives.begin(), positives.end());

  const std::size_t total = positives.size();
  const std::size_t bins = static_cast<std::size_t>(grade_count - 1);
  for (std::size_t cell = 0; cell < field.values.size(); ++cell) {
    const double v = field.values[cell];
    if (v <= 0.0) continue;
    const std::size_t count_le = static_cast<std::size_t>(
        std::upper_bound(positives.begin(), positives.end(), v) - positives.begin());
    // ceil(bins * count_le / total): equal-population bins over grades
    // 1..n-1, ties sharing a grade, the maximum always on n-1.
    out.grades[cell] = static_cast<int>((bins * count_le + total - 1) / total);
  }
  return out;
}

}  // namespace conflictgrid
