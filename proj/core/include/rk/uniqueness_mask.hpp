#pragma once

#include <cstdint>
#include <vector>

#include "rk/lattice.hpp"

namespace rk {

/// Per-cell map "this entry is uniquely solvable". A property of the
/// coefficient matrix alone: cell (i, j) is unique exactly when every
/// null-space basis vector is zero in that cell's coordinate, so the mask
/// never depends on clue values.
struct UniquenessMask {
  LatticeDims dims;
  std::vector<std::uint8_t> unique_cells;  // cell_index layout

  bool at(Cell c) const { return unique_cells[cell_index(dims, c)] != 0; }
  bool all_unique() const;
  int unique_count() const;

  bool operator==(const UniquenessMask&) const = default;
};

/// The border ({1, n} x I_m) u (I_n x {1, m}). For n = 1 or m = 1 this is
/// the whole lattice.
struct BorderMask {
  LatticeDims dims;
  std::vector<Cell> cells;  // sorted by (j, i)
};

BorderMask border_mask(const LatticeDims& dims);
bool on_border(const LatticeDims& dims, Cell c);

}  // namespace rk
