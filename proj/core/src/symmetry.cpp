#include "rk/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace rk {

std::string to_string(GridTransform t) {
  switch (t) {
    case GridTransform::rot180: return "rot180";
    case GridTransform::flip_first: return "flip_first";
    case GridTransform::flip_second: return "flip_second";
    case GridTransform::transpose: return "transpose";
    case GridTransform::anti_transpose: return "anti_transpose";
  }
  throw std::invalid_argument("unknown transform");
}

namespace {

bool needs_square(GridTransform t) {
  return t == GridTransform::transpose || t == GridTransform::anti_transpose;
}

}  // namespace

Cell transform_cell(GridTransform t, const LatticeDims& dims, Cell c) {
  if (!contains(dims, c)) throw std::invalid_argument("cell outside lattice");
  if (needs_square(t) && dims.n != dims.m)
    throw std::invalid_argument(to_string(t) + " needs a square lattice");
  switch (t) {
    case GridTransform::rot180:
      return Cell{dims.n + 1 - c.i, dims.m + 1 - c.j};
    case GridTransform::flip_first:
      return Cell{dims.n + 1 - c.i, c.j};
    case GridTransform::flip_second:
      return Cell{c.i, dims.m + 1 - c.j};
    case GridTransform::transpose:
      return Cell{c.j, c.i};
    case GridTransform::anti_transpose:
      return Cell{dims.n - c.j + 1, dims.n - c.i + 1};
  }
  throw std::invalid_argument("unknown transform");
}

Slope transform_slope(GridTransform t, Slope s) {
  switch (t) {
    case GridTransform::rot180:
      return s;
    case GridTransform::flip_first:
    case GridTransform::flip_second:
      return negated(s);
    case GridTransform::transpose:
    case GridTransform::anti_transpose:
      return reciprocal(s);
  }
  throw std::invalid_argument("unknown transform");
}

Line transform_line(GridTransform t, const LatticeDims& dims,
                    const Line& line) {
  Line out;
  out.slope = transform_slope(t, line.slope);
  out.cells.reserve(line.cells.size());
  for (const Cell& c : line.cells)
    out.cells.push_back(transform_cell(t, dims, c));
  std::sort(out.cells.begin(), out.cells.end());
  const Cell& c0 = out.cells.front();
  out.offset = out.slope.is_vertical()
                   ? c0.i
                   : out.slope.num() * c0.i - out.slope.den() * c0.j;
  return out;
}

UniquenessMask transform_mask(GridTransform t, const UniquenessMask& mask) {
  UniquenessMask out{mask.dims,
                     std::vector<std::uint8_t>(mask.dims.cell_count(), 0)};
  for (int j = 1; j <= mask.dims.m; ++j)
    for (int i = 1; i <= mask.dims.n; ++i) {
      const Cell c{i, j};
      const Cell image = transform_cell(t, mask.dims, c);
      out.unique_cells[cell_index(mask.dims, image)] =
          mask.unique_cells[cell_index(mask.dims, c)];
    }
  return out;
}

}  // namespace rk
