#include "rk/clue_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rk {

std::vector<std::uint8_t> ClueMatrix::row_values(int r) const {
  if (r < 0 || r >= rows()) throw std::out_of_range("row index");
  std::vector<std::uint8_t> row(cols(), 0);
  for (const Cell& c : lines[r].cells) row[cell_index(dims, c)] = 1;
  return row;
}

ClueMatrix build_coefficient_matrix(const LatticeDims& dims,
                                    std::vector<Slope> slopes) {
  if (slopes.empty())
    throw std::invalid_argument("coefficient matrix needs at least one slope");
  std::sort(slopes.begin(), slopes.end(), slope_less);
  if (std::adjacent_find(slopes.begin(), slopes.end()) != slopes.end())
    throw std::invalid_argument("duplicate slope in slope set");

  ClueMatrix cm;
  cm.dims = dims;
  cm.slopes = std::move(slopes);
  for (const Slope& s : cm.slopes) {
    auto group = enumerate_lines(dims, s);
    cm.lines.insert(cm.lines.end(), std::make_move_iterator(group.begin()),
                    std::make_move_iterator(group.end()));
  }
  return cm;
}

}  // namespace rk
