#pragma once

#include <cstddef>
#include <vector>

#include "conflictgrid/leximax.hpp"
#include "conflictgrid/quantize.hpp"

namespace conflictgrid {

// Total preorder over cells by conflict intensity. Cells with identical
// sorted grade vectors form one equivalence group; groups are numbered
// 0..group_count-1 from weakest to strongest.
struct CellRanking {
  std::vector<SortedGradeVector> vectors;  // one per cell
  std::vector<std::size_t> group_of_cell;  // ascending with intensity
  std::size_t group_count = 0;
  // Rank-position span [lo, hi] each group occupies when cells are laid out
  // weakest to strongest (group g holds hi - lo + 1 cells).
  std::vector<std::size_t> group_lo;
  std::vector<std::size_t> group_hi;

  std::size_t cell_count() const { return vectors.size(); }
  // Cells strictly weaker than this cell's group.
  std::size_t cells_below(std::size_t cell) const { return group_lo[group_of_cell[cell]]; }
  // Cells strictly stronger.
  std::size_t cells_above(std::size_t cell) const {
    return cell_count() - 1 - group_hi[group_of_cell[cell]];
  }
};

// Builds the per-cell grade vectors from one GradeField per country, sorts
// each descending, and orders cells by compare_intensity. All fields must
// share cell count, and grade scale. Throws ValidationError.
CellRanking rank_cells(const std::vector<GradeField>& fields);

// Ranking over explicit per-cell vectors (used by the overall stage, where
// components are weighted forecast grades rather than countries).
CellRanking rank_vectors(std::vector<SortedGradeVector> vectors);

}  // namespace conflictgrid
