#pragma once

#include <vector>

namespace conflictgrid {

// One cell's grades, one entry per country (declaration order).
using GradeVector = std::vector<int>;

// Same grades sorted nonincreasing; the domain of the intensity comparison.
struct SortedGradeVector {
  std::vector<int> grades;

  friend bool operator==(const SortedGradeVector&, const SortedGradeVector&) = default;
};

SortedGradeVector sort_desc(const GradeVector& v);

enum class Ordering { Less, Equal, Greater };

// Intensity comparison: plain lexicographic order on the descending-sorted
// vectors, so the single biggest grade decides first, then the next, and so
// on. Throws ValidationError on length mismatch.
Ordering compare_intensity(const SortedGradeVector& a, const SortedGradeVector& b);

inline bool intensity_less(const SortedGradeVector& a, const SortedGradeVector& b) {
  return compare_intensity(a, b) == Ordering::Less;
}

bool all_zero(const SortedGradeVector& v);

}  // namespace conflictgrid
