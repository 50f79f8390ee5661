#include "conflictgrid/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "conflictgrid/errors.hpp"

namespace conflictgrid {

CellRanking rank_vectors(std::vector<SortedGradeVector> vectors) {
  const std::size_t cells = vectors.size();
  for (const auto& v : vectors) {
    if (v.grades.size() != vectors.front().grades.size()) {
      throw ValidationError("grade vectors must share one length");
    }
  }

  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), 0);
  // Ascending lexicographic order on descending-sorted vectors is exactly
  // ascending intensity; the cell index only stabilizes the layout of ties.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (vectors[a].grades != vectors[b].grades) return vectors[a].grades < vectors[b].grades;
    return a < b;
  });

  CellRanking ranking;
  ranking.vectors = std::move(vectors);
  ranking.group_of_cell.assign(cells, 0);
  for (std::size_t pos = 0; pos < cells; ++pos) {
    const std::size_t cell = order[pos];
    if (pos == 0 || ranking.vectors[cell].grades != ranking.vectors[order[pos - 1]].grades) {
      ranking.group_lo.push_back(pos);
      ranking.group_hi.push_back(pos);
      ++ranking.group_count;
    } else {
      ranking.group_hi.back() = pos;
    }
    ranking.group_of_cell[cell] = ranking.group_count - 1;
  }
  return ranking;
}

CellRanking rank_cells(const std::vector<GradeField>& fields) {
  if (fields.empty()) throw ValidationError("ranking needs at least one grade field");
  const std::size_t cells = fields.front().grades.size();
  const int n = fields.front().grade_count;
  for (const GradeField& f : fields) {
    if (f.grades.size() != cells) throw ValidationError("grade fields do not share one grid");
    if (f.grade_count != n) throw ValidationError("grade fields do not share one grade scale");
    for (int g : f.grades) {
      if (g < 0 || g >= n) {
        throw ValidationError("grade " + std::to_string(g) + " outside scale 0.." +
                              std::to_string(n - 1));
      }
    }
  }

  std::vector<SortedGradeVector> vectors;
  vectors.reserve(cells);
  GradeVector scratch(fields.size());
  for (std::size_t cell = 0; cell < cells; ++cell) {
    for (std::size_t k = 0; k < fields.size(); ++k) scratch[k] = fields[k].grades[cell];
    vectors.push_back(sort_desc(scratch));
  }
  return rank_vectors(std::move(vectors));
}

}  // namespace conflictgrid
