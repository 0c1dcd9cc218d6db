#pragma once

#include <stdexcept>
#include <vector>

#include "rk/clue_matrix.hpp"
#include "rk/linalg.hpp"
#include "rk/slope.hpp"
#include "rk/uniqueness_mask.hpp"

namespace rk {

/// Raised when a scan over slope prefixes hits its cap before succeeding.
/// Signals that the search bound was too small, not a mathematical result.
class SearchCapExceeded : public std::runtime_error {
public:
  explicit SearchCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// Mask computed from the null space of the coefficient matrix of
/// (dims, slopes): a cell is unique iff its coordinate is zero in every
/// basis vector.
UniquenessMask entry_uniqueness_mask(const LatticeDims& dims,
                                     const std::vector<Slope>& slopes);

/// True iff every solvable clue system over (dims, slopes) determines every
/// cell, i.e. the coefficient matrix has full column rank.
bool is_globally_unique(const LatticeDims& dims,
                        const std::vector<Slope>& slopes);

/// The five minimal slope-prefix endpoints for an n x m lattice, each the
/// smallest slope (canonical order) whose prefix achieves the condition:
///   whole_grid        every cell unique
///   row               every cell of the first or last row (j = 1 or j = m)
///   column            every cell of the first or last column (i = 1 or i = n)
///   border            every border cell unique
///   row_or_column     min(row, column)
struct InvariantReport {
  LatticeDims dims;
  Slope whole_grid = Slope::integer(0);
  Slope row = Slope::integer(0);
  Slope column = Slope::integer(0);
  Slope border = Slope::integer(0);
  Slope row_or_column = Slope::integer(0);
};

/// Scans prefixes in canonical order up through the integer slope max_q and
/// records the first success for each condition. Monotone in the prefix
/// (extending a slope set never un-determines a cell), so forward scanning
/// finds the minimum. Throws SearchCapExceeded when the cap is too small.
InvariantReport uniqueness_invariants(const LatticeDims& dims, int max_q);

/// Smallest q >= 1 with q^2 + 3q - 1 >= max(n, m); prefixes through the
/// integer slope q are guaranteed to determine the whole lattice, so this is
/// a safe default scan cap.
int default_search_cap(const LatticeDims& dims);

struct TableRow {
  int n = 0;
  Slope minimal_slope = Slope::integer(0);
  int prefix_len = 0;
  int matrix_rows = 0;
  int rank = 0;

  bool operator==(const TableRow&) const = default;
};

/// For each n in 1..n_max, the smallest slope whose prefix makes the n x n
/// lattice globally unique. max_q = 0 picks the default cap per n. The rows
/// are independent; with jobs > 1 they are computed by a worker pool and
/// merged back in order, so the output is identical for any job count.
std::vector<TableRow> search_table(int n_max, int max_q = 0, int jobs = 1);

}  // namespace rk
