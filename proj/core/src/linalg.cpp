#include "rk/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace rk {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, BigRat(0));
}

RationalMatrix RationalMatrix::from_clue_matrix(const ClueMatrix& cm) {
  RationalMatrix m(cm.rows(), cm.cols());
  for (int r = 0; r < cm.rows(); ++r)
    for (const Cell& c : cm.lines[r].cells)
      m.at(r, cell_index(cm.dims, c)) = 1;
  return m;
}

std::size_t RationalMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  return static_cast<std::size_t>(r) * cols_ + c;
}

namespace {

// Clears denominators row by row (rank, null space and solution sets are
// invariant under row scaling). rhs, when given, is appended as one extra
// column and participates in the row lcm.
std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m,
                                              const std::vector<BigRat>* rhs) {
  const int cols = m.cols();
  const int width = cols + (rhs ? 1 : 0);
  std::vector<std::vector<BigInt>> rows(m.rows());
  BigInt lcm, quot;
  for (int r = 0; r < m.rows(); ++r) {
    lcm = 1;
    for (int c = 0; c < cols; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    if (rhs)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[r].get_den_mpz_t());
    rows[r].assign(width, BigInt(0));
    for (int c = 0; c < width; ++c) {
      const BigRat& v = (c < cols) ? m.at(r, c) : (*rhs)[r];
      if (sgn(v) == 0) continue;
      mpz_divexact(quot.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
      mpz_mul(rows[r][c].get_mpz_t(), quot.get_mpz_t(), v.get_num_mpz_t());
    }
  }
  return rows;
}

struct EchelonForm {
  std::vector<std::vector<BigInt>> rows;  // pivot rows first, then zero rows
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  int width = 0;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// One-step fraction-free elimination: after step k every entry below the
// pivot rows is a k+1 minor of the (row-permuted) input, so the division by
// the previous pivot is exact and intermediate values stay integral.
// Pivots are searched in columns 0..pivot_limit-1 only; any extra columns
// (e.g. an augmented right-hand side) are updated but never pivoted on.
EchelonForm fraction_free_echelon(std::vector<std::vector<BigInt>> m,
                                  int pivot_limit) {
  EchelonForm ef;
  const int nrows = static_cast<int>(m.size());
  ef.width = nrows ? static_cast<int>(m[0].size()) : pivot_limit;
  BigInt prev(1), t;
  int r = 0;
  for (int col = 0; col < pivot_limit; ++col) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (sgn(m[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      ef.free_cols.push_back(col);
      continue;
    }
    std::swap(m[r], m[piv]);
    const bool divide = mpz_cmp_ui(prev.get_mpz_t(), 1) != 0;
    for (int i = r + 1; i < nrows; ++i) {
      if (sgn(m[i][col]) == 0) {
        for (int j = col + 1; j < ef.width; ++j) {
          if (sgn(m[i][j]) == 0) continue;
          mpz_mul(t.get_mpz_t(), m[r][col].get_mpz_t(), m[i][j].get_mpz_t());
          if (divide)
            mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          else
            mpz_swap(m[i][j].get_mpz_t(), t.get_mpz_t());
        }
        continue;
      }
      for (int j = col + 1; j < ef.width; ++j) {
        mpz_mul(t.get_mpz_t(), m[r][col].get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), m[i][col].get_mpz_t(), m[r][j].get_mpz_t());
        if (divide)
          mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        else
          mpz_swap(m[i][j].get_mpz_t(), t.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ef.pivot_cols.push_back(col);
    ++r;
  }
  ef.rows = std::move(m);
  return ef;
}

// Back substitution over exact rationals against the integer echelon rows.
// `values` carries fixed coordinates (free columns, and the implicit zeros);
// pivot coordinates get filled from bottom pivot row up. `aug` selects the
// augmented column as the right-hand side (or -1 for a homogeneous solve).
void back_substitute(const EchelonForm& ef, int ncols, int aug,
                     std::vector<BigRat>& values) {
  for (int k = ef.rank() - 1; k >= 0; --k) {
    const int c = ef.pivot_cols[k];
    const std::vector<BigInt>& row = ef.rows[k];
    BigRat s = (aug >= 0) ? BigRat(row[aug]) : BigRat(0);
    for (int j = c + 1; j < ncols; ++j) {
      if (sgn(values[j]) == 0 || sgn(row[j]) == 0) continue;
      s -= BigRat(row[j]) * values[j];
    }
    if (sgn(s) != 0) values[c] = s / BigRat(row[c]);
  }
}

NullSpaceBasis basis_from_echelon(const EchelonForm& ef, int ncols) {
  NullSpaceBasis basis;
  basis.length = ncols;
  basis.vectors.reserve(ef.free_cols.size());
  for (int f : ef.free_cols) {
    std::vector<BigRat> v(ncols, BigRat(0));
    v[f] = 1;
    back_substitute(ef, ncols, -1, v);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  base %= kPrime;
  while (exp) {
    if (exp & 1) acc = acc * base % kPrime;
    base = base * base % kPrime;
    exp >>= 1;
  }
  return acc;
}

// Rank over Z/p. Returns nullopt when some denominator vanishes mod p
// (then the reduction is meaningless and the caller must go exact).
std::optional<int> rank_mod_prime(const RationalMatrix& m) {
  const int nrows = m.rows();
  const int ncols = m.cols();
  std::vector<std::vector<std::uint32_t>> a(nrows);
  for (int r = 0; r < nrows; ++r) {
    a[r].resize(ncols);
    for (int c = 0; c < ncols; ++c) {
      const BigRat& v = m.at(r, c);
      const std::uint64_t den = mpz_fdiv_ui(v.get_den_mpz_t(), kPrime);
      if (den == 0) return std::nullopt;
      // fdiv yields the non-negative residue for negative numerators too
      const std::uint64_t num = mpz_fdiv_ui(v.get_num_mpz_t(), kPrime);
      a[r][c] =
          static_cast<std::uint32_t>(num * mod_pow(den, kPrime - 2) % kPrime);
    }
  }
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int i = rank; i < nrows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    const std::uint64_t inv = mod_pow(a[rank][col], kPrime - 2);
    for (int i = rank + 1; i < nrows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = a[i][col] * inv % kPrime;
      a[i][col] = 0;
      for (int j = col + 1; j < ncols; ++j) {
        if (a[rank][j] == 0) continue;
        const std::uint64_t sub = f * a[rank][j] % kPrime;
        const std::uint64_t cur = a[i][j];
        a[i][j] = static_cast<std::uint32_t>(cur >= sub ? cur - sub
                                                        : cur + kPrime - sub);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank(const RationalMatrix& m) {
  return fraction_free_echelon(integer_rows(m, nullptr), m.cols()).rank();
}

NullSpaceBasis nullspace(const RationalMatrix& m) {
  const EchelonForm ef =
      fraction_free_echelon(integer_rows(m, nullptr), m.cols());
  return basis_from_echelon(ef, m.cols());
}

LinearSolution solve(const RationalMatrix& m, const std::vector<BigRat>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::invalid_argument("right-hand side length does not match rows");
  const int ncols = m.cols();
  const EchelonForm ef =
      fraction_free_echelon(integer_rows(m, &rhs), ncols);

  LinearSolution out;
  out.nullbasis = basis_from_echelon(ef, ncols);
  for (int r = ef.rank(); r < static_cast<int>(ef.rows.size()); ++r) {
    if (sgn(ef.rows[r][ncols]) != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  std::vector<BigRat> particular(ncols, BigRat(0));
  back_substitute(ef, ncols, ncols, particular);
  out.particular = std::move(particular);
  out.status = ef.free_cols.empty() ? SolveStatus::unique
                                    : SolveStatus::underdetermined;
  return out;
}

bool has_full_column_rank(const RationalMatrix& m) {
  if (m.rows() < m.cols()) return false;
  if (m.cols() == 0) return true;
  const std::optional<int> modular = rank_mod_prime(m);
  if (modular && *modular == m.cols()) return true;
  return rank(m) == m.cols();
}

}  // namespace rk
