#pragma once

#include <string>
#include <vector>

#include "conflictgrid/utility.hpp"

namespace conflictgrid {

inline constexpr int kDefaultGradeCount = 6;

enum class QuantizeMode { Linear, Quantile };

const char* quantize_mode_name(QuantizeMode mode);

// Per-cell interest grades on the 0..n-1 scale. 0 means no interest at all;
// n-1 is the strongest interest the field expresses.
struct GradeField {
  std::string label;  // country code, or a stage name for derived fields
  ResourceKind resource = ResourceKind::Oil;
  int grade_count = kDefaultGradeCount;  // n
  std::vector<int> grades;

  friend bool operator==(const GradeField&, const GradeField&) = default;
};

// Discretizes w*u onto the n-grade scale.
//
// Linear: grade = floor(n * w*u / (max(w*u) * (1 + 1e-9))), so the maximum
// lands on n-1 and zero utility always lands on grade 0. An identically zero
// field grades to all zeros.
//
// Quantile: zeros pin to grade 0; positive values split into equal-population
// bins over grades 1..n-1 by rank, ties always sharing a grade. Grades are
// invariant under positive rescaling of w by construction.
//
// Throws ValidationError for n < 2 or weight <= 0.
GradeField quantize(const UtilityField& field, int grade_count, QuantizeMode mode,
                    double weight);

}  // namespace conflictgrid
