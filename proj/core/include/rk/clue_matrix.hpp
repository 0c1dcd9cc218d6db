#pragma once

#include <cstdint>
#include <vector>

#include "rk/lattice.hpp"
#include "rk/slope.hpp"

namespace rk {

/// The 0/1 coefficient matrix of a slope set over a lattice. Row r is the
/// incidence vector of lines[r]: entry 1 exactly at the columns of the cells
/// on that line (column layout per cell_index). Rows are grouped by slope in
/// canonical order, offsets ascending within a slope, so the matrix is a
/// deterministic function of (dims, slope set).
struct ClueMatrix {
  LatticeDims dims;
  std::vector<Slope> slopes;  // canonically sorted, pairwise distinct
  std::vector<Line> lines;    // one per row

  int rows() const { return static_cast<int>(lines.size()); }
  int cols() const { return dims.cell_count(); }

  /// Dense 0/1 contents of one row.
  std::vector<std::uint8_t> row_values(int r) const;
};

/// Assembles the coefficient matrix for the given slopes (any reduced
/// rationals or vertical). The slope list is sorted canonically; duplicates
/// are rejected, as is an empty list.
ClueMatrix build_coefficient_matrix(const LatticeDims& dims,
                                    std::vector<Slope> slopes);

}  // namespace rk
