#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "rk/clue_matrix.hpp"

namespace rk {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense matrix of exact rationals (arbitrary-precision numerator and
/// denominator, always stored canonical: reduced, positive denominator).
class RationalMatrix {
public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix from_clue_matrix(const ClueMatrix& cm);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigRat& at(int r, int c) { return entries_[index(r, c)]; }
  const BigRat& at(int r, int c) const { return entries_[index(r, c)]; }

  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t index(int r, int c) const;
  int rows_;
  int cols_;
  std::vector<BigRat> entries_;
};

/// Exact basis of the right null space. Vectors are reduced-column-echelon
/// canonical: listed by free column ascending, each with entry 1 at its own
/// free column and 0 at every other free column, so the basis depends only on
/// the matrix.
struct NullSpaceBasis {
  int length = 0;  // coordinate count (matrix column count)
  std::vector<std::vector<BigRat>> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
};

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::optional<std::vector<BigRat>> particular;  // absent iff inconsistent
  NullSpaceBasis nullbasis;
};

/// Exact rank via fraction-free (Bareiss) elimination over big integers.
/// Pivot rule is frozen: columns scanned left to right, pivot is the first
/// remaining row with a non-zero entry in the current column.
int rank(const RationalMatrix& m);

/// Exact null-space basis; dim = cols - rank. Deterministic per the pivot rule.
NullSpaceBasis nullspace(const RationalMatrix& m);

/// Exact solve. Inconsistent systems get status inconsistent and no
/// particular solution; otherwise the particular solution has value 0 at
/// every free column, and the null basis spans the full solution set.
/// Throws std::invalid_argument when rhs length != rows.
LinearSolution solve(const RationalMatrix& m, const std::vector<BigRat>& rhs);

/// Exact full-column-rank test with a fast one-sided certificate: full rank
/// modulo a prime is a proof of full rank over the rationals (a non-zero
/// minor mod p is non-zero over the integers); a modular rank deficit is
/// always re-confirmed by the fraction-free elimination above.
bool has_full_column_rank(const RationalMatrix& m);

}  // namespace rk
