#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rk/clue_matrix.hpp"
#include "rk/lattice.hpp"
#include "rk/linalg.hpp"
#include "rk/slope.hpp"
#include "rk/uniqueness_mask.hpp"

namespace rk {

/// Parse failure with the 1-based input line it was detected on.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct ClueKey {
  Slope slope = Slope::integer(0);
  std::int64_t offset = 0;

  bool operator==(const ClueKey&) const = default;
};

struct ClueKeyLess {
  bool operator()(const ClueKey& a, const ClueKey& b) const {
    if (a.slope != b.slope) return slope_less(a.slope, b.slope);
    return a.offset < b.offset;
  }
};

/// A concrete puzzle: a lattice, declared slopes, and exactly one exact
/// rational clue value per non-empty line of each declared slope (full clue
/// sets only; the parser and builders enforce completeness).
struct PuzzleInstance {
  LatticeDims dims;
  std::vector<Slope> slopes;  // canonically sorted, distinct
  std::map<ClueKey, BigRat, ClueKeyLess> clues;

  bool operator==(const PuzzleInstance&) const = default;
};

/// Dense exact rational grid values, one per cell.
struct GridValues {
  LatticeDims dims;
  std::vector<BigRat> values;  // cell_index layout

  BigRat& at(Cell c) { return values[cell_index(dims, c)]; }
  const BigRat& at(Cell c) const { return values[cell_index(dims, c)]; }

  bool operator==(const GridValues&) const = default;
};

GridValues zero_grid(const LatticeDims& dims);

/// rk v1 text format (UTF-8, LF, '#' starts a comment):
///   rk v1
///   dims <n> <m>
///   slopes <tok>...
///   clue <tok> <offset> <value>      one per line, slope order then offset
/// Values are integers or "<a>/<b>". parse_puzzle validates completeness and
/// is the inverse of serialize_puzzle on canonical text.
PuzzleInstance parse_puzzle(std::string_view text);
std::string serialize_puzzle(const PuzzleInstance& p);

/// Clue values read off a grid: each clue is the exact sum of the grid
/// values on its line.
PuzzleInstance clues_from_grid(const GridValues& grid,
                               std::vector<Slope> slopes);

/// Right-hand side aligned with the rows of a coefficient matrix built from
/// the same dims and slopes.
std::vector<BigRat> clue_rhs(const PuzzleInstance& p, const ClueMatrix& cm);

/// Necessary-condition screen: the lines of one slope partition the lattice,
/// so every slope's clue total must equal the grid sum. Unequal totals make
/// the instance unsolvable.
struct SlopeTotal {
  Slope slope = Slope::integer(0);
  BigRat total;
};
struct ValidationReport {
  std::vector<SlopeTotal> totals;
  bool totals_agree = true;
  std::vector<std::string> notes;
};
ValidationReport validate(const PuzzleInstance& p);

/// Seeded uniform integer grid over [lo, hi]; identical output for identical
/// arguments on every platform. Throws std::invalid_argument when lo > hi.
GridValues random_grid(const LatticeDims& dims, std::int64_t lo,
                       std::int64_t hi, std::uint64_t seed);

/// Fixed-width text, top row (j = m) first. Masks render '#' for unique
/// cells and '.' for the rest. Every row ends with '\n'.
std::string render_grid(const GridValues& grid);
std::string render_mask(const UniquenessMask& mask);

/// Grid file format: "grid <n> <m>" then m rows, top row first, each with n
/// space-separated exact values.
GridValues parse_grid(std::string_view text);
std::string serialize_grid(const GridValues& grid);

/// Exact rational token helpers ("-3", "5/2").
BigRat parse_rational(std::string_view token);
std::string rational_token(const BigRat& value);

}  // namespace rk
