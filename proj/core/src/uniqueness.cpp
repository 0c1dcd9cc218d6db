#include "rk/uniqueness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace rk {

bool UniquenessMask::all_unique() const {
  return std::all_of(unique_cells.begin(), unique_cells.end(),
                     [](std::uint8_t u) { return u != 0; });
}

int UniquenessMask::unique_count() const {
  return static_cast<int>(
      std::count_if(unique_cells.begin(), unique_cells.end(),
                    [](std::uint8_t u) { return u != 0; }));
}

bool on_border(const LatticeDims& dims, Cell c) {
  if (!contains(dims, c)) throw std::out_of_range("cell outside lattice");
  return c.i == 1 || c.i == dims.n || c.j == 1 || c.j == dims.m;
}

BorderMask border_mask(const LatticeDims& dims) {
  BorderMask b{dims, {}};
  for (int j = 1; j <= dims.m; ++j)
    for (int i = 1; i <= dims.n; ++i)
      if (on_border(dims, Cell{i, j})) b.cells.push_back(Cell{i, j});
  return b;
}

UniquenessMask entry_uniqueness_mask(const LatticeDims& dims,
                                     const std::vector<Slope>& slopes) {
  const ClueMatrix cm = build_coefficient_matrix(dims, slopes);
  const NullSpaceBasis basis =
      nullspace(RationalMatrix::from_clue_matrix(cm));
  UniquenessMask mask{dims, std::vector<std::uint8_t>(dims.cell_count(), 1)};
  for (const auto& v : basis.vectors)
    for (int c = 0; c < dims.cell_count(); ++c)
      if (sgn(v[c]) != 0) mask.unique_cells[c] = 0;
  return mask;
}

bool is_globally_unique(const LatticeDims& dims,
                        const std::vector<Slope>& slopes) {
  const ClueMatrix cm = build_coefficient_matrix(dims, slopes);
  return has_full_column_rank(RationalMatrix::from_clue_matrix(cm));
}

namespace {

bool row_all_unique(const UniquenessMask& mask, int j) {
  for (int i = 1; i <= mask.dims.n; ++i)
    if (!mask.at(Cell{i, j})) return false;
  return true;
}

bool column_all_unique(const UniquenessMask& mask, int i) {
  for (int j = 1; j <= mask.dims.m; ++j)
    if (!mask.at(Cell{i, j})) return false;
  return true;
}

bool border_all_unique(const UniquenessMask& mask) {
  for (const Cell& c : border_mask(mask.dims).cells)
    if (!mask.at(c)) return false;
  return true;
}

}  // namespace

InvariantReport uniqueness_invariants(const LatticeDims& dims, int max_q) {
  if (max_q < 1) throw std::invalid_argument("search cap must be >= 1");
  const std::int64_t last_index = order_index(Slope::integer(max_q));

  std::optional<Slope> grid, row, col, border;
  for (std::int64_t idx = 0; idx <= last_index && !grid; ++idx) {
    const Slope s = slope_at_index(idx);
    const UniquenessMask mask = entry_uniqueness_mask(dims, slope_prefix(s));
    if (!row && (row_all_unique(mask, 1) || row_all_unique(mask, dims.m)))
      row = s;
    if (!col &&
        (column_all_unique(mask, 1) || column_all_unique(mask, dims.n)))
      col = s;
    if (!border && border_all_unique(mask)) border = s;
    if (!grid && mask.all_unique()) grid = s;
  }
  if (!grid || !row || !col || !border)
    throw SearchCapExceeded("no prefix through slope " +
                            std::to_string(max_q) + " determines a " +
                            std::to_string(dims.n) + "x" +
                            std::to_string(dims.m) + " lattice");

  InvariantReport report;
  report.dims = dims;
  report.whole_grid = *grid;
  report.row = *row;
  report.column = *col;
  report.border = *border;
  report.row_or_column = slope_less(*row, *col) ? *row : *col;
  return report;
}

int default_search_cap(const LatticeDims& dims) {
  const int size = std::max(dims.n, dims.m);
  int q = 1;
  while (q * q + 3 * q - 1 < size) ++q;
  return q;
}

namespace {

TableRow table_row(int n, int max_q) {
  const LatticeDims dims(n, n);
  const int cap = max_q > 0 ? max_q : default_search_cap(dims);
  const std::int64_t last_index = order_index(Slope::integer(cap));
  for (std::int64_t idx = 0; idx <= last_index; ++idx) {
    const Slope s = slope_at_index(idx);
    const ClueMatrix cm = build_coefficient_matrix(dims, slope_prefix(s));
    if (has_full_column_rank(RationalMatrix::from_clue_matrix(cm)))
      return TableRow{n, s, static_cast<int>(idx) + 1, cm.rows(),
                      dims.cell_count()};
  }
  throw SearchCapExceeded("no prefix through slope " + std::to_string(cap) +
                          " determines a " + std::to_string(n) + "x" +
                          std::to_string(n) + " lattice");
}

}  // namespace

std::vector<TableRow> search_table(int n_max, int max_q, int jobs) {
  if (n_max < 1) throw std::invalid_argument("table size must be >= 1");
  std::vector<TableRow> rows(n_max);
  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, n_max);
  if (jobs == 1) {
    for (int n = 1; n <= n_max; ++n) rows[n - 1] = table_row(n, max_q);
    return rows;
  }

  std::atomic<int> next{1};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int n = next.fetch_add(1);
      if (n > n_max || failed.load()) return;
      try {
        rows[n - 1] = table_row(n, max_q);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace rk
