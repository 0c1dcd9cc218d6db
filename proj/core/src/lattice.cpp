#include "rk/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace rk {

LatticeDims::LatticeDims(int n_, int m_) : n(n_), m(m_) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("lattice dimensions must be positive");
}

bool contains(const LatticeDims& dims, Cell c) {
  return c.i >= 1 && c.i <= dims.n && c.j >= 1 && c.j <= dims.m;
}

int cell_index(const LatticeDims& dims, Cell c) {
  if (!contains(dims, c)) throw std::out_of_range("cell outside lattice");
  return (c.j - 1) * dims.n + (c.i - 1);
}

Cell cell_at(const LatticeDims& dims, int index) {
  if (index < 0 || index >= dims.cell_count())
    throw std::out_of_range("cell index outside lattice");
  return Cell{index % dims.n + 1, index / dims.n + 1};
}

std::vector<Line> enumerate_lines(const LatticeDims& dims, Slope slope) {
  std::vector<Line> lines;
  if (slope.is_vertical()) {
    lines.reserve(dims.n);
    for (int i = 1; i <= dims.n; ++i) {
      Line line{slope, i, {}};
      line.cells.reserve(dims.m);
      for (int j = 1; j <= dims.m; ++j) line.cells.push_back(Cell{i, j});
      lines.push_back(std::move(line));
    }
    return lines;
  }

  const std::int64_t p = slope.num();
  const std::int64_t q = slope.den();
  const std::int64_t lo = std::min<std::int64_t>(p, p * dims.n) - q * dims.m;
  const std::int64_t hi = std::max<std::int64_t>(p, p * dims.n) - q;
  for (std::int64_t c = lo; c <= hi; ++c) {
    Line line{slope, c, {}};
    for (int i = 1; i <= dims.n; ++i) {
      const std::int64_t t = p * i - c;
      if (t % q != 0) continue;
      const std::int64_t j = t / q;
      if (j >= 1 && j <= dims.m) line.cells.push_back(Cell{i, static_cast<int>(j)});
    }
    if (!line.cells.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace rk
