#pragma once

#include <string>

#include "rk/lattice.hpp"
#include "rk/uniqueness_mask.hpp"

namespace rk {

/// The five lattice involutions under which per-cell uniqueness transports:
///   rot180          (i, j) -> (n+1-i, m+1-j)   any slope set
///   flip_first      (i, j) -> (n+1-i, j)       negation-closed slope sets
///   flip_second     (i, j) -> (i, m+1-j)       negation-closed slope sets
///   transpose       (i, j) -> (j, i)           reciprocal-closed, square only
///   anti_transpose  (i, j) -> (n-j+1, n-i+1)   reciprocal-closed, square only
/// anti_transpose is the composition of transpose with rot180, included
/// because the staircase constructions replay it directly.
enum class GridTransform {
  rot180,
  flip_first,
  flip_second,
  transpose,
  anti_transpose,
};

std::string to_string(GridTransform t);

/// Image of a cell. Throws std::invalid_argument for a cell outside the
/// lattice or a transpose kind on a non-square lattice.
Cell transform_cell(GridTransform t, const LatticeDims& dims, Cell c);

/// How the transform acts on slopes: rot180 preserves, flips negate,
/// transpose kinds take reciprocals.
Slope transform_slope(GridTransform t, Slope s);

/// Image line: its cell set is the pointwise image of the input's cells.
Line transform_line(GridTransform t, const LatticeDims& dims, const Line& line);

/// Pointwise relocation of the mask's boolean values.
UniquenessMask transform_mask(GridTransform t, const UniquenessMask& mask);

}  // namespace rk
