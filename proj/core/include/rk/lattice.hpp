#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rk/slope.hpp"

namespace rk {

/// The n x m lattice {(i, j) : 1 <= i <= n, 1 <= j <= m}.
/// i is the first (horizontal) coordinate, j the second (vertical) one.
struct LatticeDims {
  int n = 1;
  int m = 1;

  LatticeDims() = default;
  LatticeDims(int n_, int m_);

  int cell_count() const { return n * m; }
  bool operator==(const LatticeDims&) const = default;
};

struct Cell {
  int i = 1;
  int j = 1;
  auto operator<=>(const Cell&) const = default;
};

bool contains(const LatticeDims& dims, Cell c);

/// Column index of a cell in the coefficient matrix: (j-1)*n + (i-1).
/// This bijection is frozen; file formats and null-space coordinates use it.
int cell_index(const LatticeDims& dims, Cell c);
Cell cell_at(const LatticeDims& dims, int index);

/// One clue line: a slope plus the integer constant identifying the line.
/// For a finite slope p/q the constant is p*i - q*j (the same for every cell
/// on the line); for the vertical slope it is the column i.
/// Lines are only materialized when they meet the lattice, so cells is
/// never empty. Cells are sorted by i, then j.
struct Line {
  Slope slope = Slope::integer(0);
  std::int64_t offset = 0;
  std::vector<Cell> cells;

  bool operator==(const Line&) const = default;
};

/// Every line of the given slope meeting the lattice, sorted by offset
/// ascending. Singleton lines are included. Accepts any reduced rational or
/// vertical slope, not just slopes with an order index.
std::vector<Line> enumerate_lines(const LatticeDims& dims, Slope slope);

}  // namespace rk
