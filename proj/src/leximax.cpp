#include "conflictgrid/leximax.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

SortedGradeVector sort_desc(const GradeVector& v) {
  SortedGradeVector out{v};
  std::sort(out.grades.begin(), out.grades.end(), std::greater<int>());
  return out;
}

Ordering compare_intensity(const SortedGradeVector& a, const SortedGradeVector& b) {
  if (a.grades.size() != b.grades.size()) {
    throw ValidationError("cannot compare grade vectors of lengths " +
                          std::to_string(a.grades.size()) + " and " +
                          std::to_string(b.grades.size()));
  }
  for (std::size_t i = 0; i < a.grades.size(); ++i) {
    if (a.grades[i] < b.grades[i]) return Ordering::Less;
    if (a.grades[i] > b.grades[i]) return Ordering::Greater;
  }
  return Ordering::Equal;
}

bool all_zero(const SortedGradeVector& v) {
  // Sorted nonincreasing, so checking the lead entry would do; stay robust to
  // hand-built vectors.
  return std::all_of(v.grades.begin(), v.grades.end(), [](int g) { return g == 0; });
}

}  // namespace conflictgrid
