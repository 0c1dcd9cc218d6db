#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rk/lattice.hpp"
#include "rk/slope.hpp"
#include "rk/symmetry.hpp"

namespace rk {

/// A finite sequence of non-negative weights w_1..w_m. Its suffix sums carve
/// a staircase region out of the lattice (see region_of).
struct Staircase {
  std::vector<int> weights;

  Staircase() = default;
  explicit Staircase(std::vector<int> w);

  int length() const { return static_cast<int>(weights.size()); }
  /// sum(i, j) = w_i + ... + w_j. Returns 0 for i > j (empty sum, needed at
  /// the boundary indices of the step conditions); otherwise requires
  /// 1 <= i <= j <= length and throws std::out_of_range.
  int sum(int i, int j) const;

  bool operator==(const Staircase&) const = default;
};

/// The region {(a, b) : 1 <= b <= m, 1 <= a <= sum(b, m)}: for each second
/// coordinate b the first sum(b, m) cells along the first coordinate. Cell
/// count is the total of those suffix sums.
struct StaircaseRegion {
  LatticeDims dims;
  std::vector<Cell> cells;  // sorted by (j, i)

  bool contains(Cell c) const;
};

/// Throws std::invalid_argument when sum(1, m) > n or m > dims.m.
StaircaseRegion region_of(const Staircase& w, const LatticeDims& dims);

/// True iff a line of slope -1/q through the cell (sum(j, m)+1, j) meets the
/// lattice only inside the staircase region elsewhere: every other lattice
/// point on it is (sum(j,m)+1-h*q, j+h), and the two inequality families
///   t*q >= sum(j, j+t-1) + 1   for 1 <= t <= m-j+1
///   t*q + 1 <= sum(j-t, j-1)   for 1 <= t <= j-1
/// push each such point into the region. When true, a full clue set
/// containing slope -1/q determines that cell from the region.
/// Preconditions: 1 <= j <= length+1, q >= 1.
bool staircase_step_ok(const Staircase& w, int j, int q);

/// Shortcut form of staircase_step_ok for shaped staircases: w_1..w_m0
/// monotone non-increasing and the remaining weights in {0, 1}. The double
/// inequality w_j + 1 <= q <= w_{j-1} - 1 is evaluated with w_0 = +infinity
/// (no upper constraint at j = 1) and, when j = m0+1, w_j read from the
/// sequence if present and as 0 past its end.
/// Throws std::invalid_argument when the shape hypothesis fails.
bool staircase_step_ok_monotone(const Staircase& w, int m0, int j, int q);

/// The canonical staircase for q >= 2: length m(q) = q + (q-1)(q+2)/2,
/// weights q+1-i for i <= q, then 1 at i = q + (j-1)(j+2)/2 for 2 <= j <= q,
/// else 0. Its region is determined by any full clue set whose slopes reach
/// -q in the canonical order.
Staircase canonical_staircase(int q);

/// The intermediate staircases linking canonical_staircase(q-1) to
/// canonical_staircase(q), ordered lexicographically by (t, s):
///   1 <= t <= q, 1 <= s <= q+1-t   single-cell growth steps
///   t = q+1, s = 1                 the transpose closure of (q, 1)
///   t = q+2, 1 <= s <= q           single-cell growth steps
/// (region(q+2, q) plus its transpose is the canonical region for q).
/// Throws std::invalid_argument outside those parameter ranges.
Staircase staircase_chain_member(int q, int t, int s);

/// One derivation step of the propagation engine: `cell` became determined,
/// either as the only open cell on a clue line (via == line) or as a
/// transform image of an already determined cell (via == transform).
struct DerivationStep {
  enum class Via { line, transform };
  Via via = Via::line;
  Cell cell;
  Slope slope = Slope::integer(0);  // line steps
  std::int64_t offset = 0;
  GridTransform transform = GridTransform::rot180;  // transform steps
  Cell source;
};

struct CertifiedSet {
  LatticeDims dims;
  std::vector<Slope> slopes;               // canonically sorted
  std::vector<std::uint8_t> determined;    // cell_index layout
  std::vector<DerivationStep> derivation;  // replayable, in order

  bool is_determined(Cell c) const {
    return determined[cell_index(dims, c)] != 0;
  }
  int determined_count() const;
};

/// Least fixpoint of "if a line of an available slope has exactly one cell
/// not yet determined, that cell becomes determined", seeded with `initial`.
/// Scan order is frozen (slope order, then offset, restart after every hit)
/// so derivation logs are reproducible; the fixpoint itself does not depend
/// on the order.
CertifiedSet propagate(const LatticeDims& dims, std::vector<Slope> slopes,
                       const std::vector<Cell>& initial);

/// Alternates propagate with transform transport (every determined cell also
/// determines its image) until nothing grows. Sound for the listed
/// transforms whenever the slope set has the matching closure property.
CertifiedSet propagate_with_transforms(const LatticeDims& dims,
                                       std::vector<Slope> slopes,
                                       const std::vector<Cell>& initial,
                                       const std::vector<GridTransform>& tfs);

/// Text form of the derivation, one record per line:
///   "(i,j) <- <slope> <offset>"        line steps
///   "(i,j) <- <transform> (i',j')"     transform steps
std::string derivation_log(const CertifiedSet& cs);

/// Largest certified lattice size for the four prefix endpoints at level q:
/// variants 1..4 give q^2+2q-3 (-1/q), q^2+2q-2 (-q), q^2+3q-2 (1/q),
/// q^2+3q-1 (q). Requires q >= 2.
std::int64_t certified_size_bound(int q, int variant);

/// The same bounds assembled from the widths of the staircase constructions
/// (three reflected row segments plus the closing cell); equals
/// certified_size_bound for every q, kept separate so the identity can be
/// checked.
std::int64_t certified_size_bound_parts(int q, int variant);

}  // namespace rk
