#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rk/puzzle_io.hpp"

namespace rkt {

inline std::string read_fixture(const std::string& name) {
  const std::string path = std::string(RK_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline rk::PuzzleInstance load_puzzle(const std::string& name) {
  return rk::parse_puzzle(read_fixture(name));
}

// The unique solution of the fig1 puzzle, rows top to bottom
// (1,3,4) / (2,7,5) / (4,9,9); frozen from an independent hand derivation
// checked against all sixteen clue values.
inline rk::GridValues fig1_grid() {
  rk::GridValues g = rk::zero_grid(rk::LatticeDims(3, 3));
  const int top_first[3][3] = {{1, 3, 4}, {2, 7, 5}, {4, 9, 9}};
  for (int r = 0; r < 3; ++r)
    for (int i = 1; i <= 3; ++i)
      g.at(rk::Cell{i, 3 - r}) = top_first[r][i - 1];
  return g;
}

// The unique solution once the slope -1/2 clues join fig2, rows top to
// bottom (8,7,3,2) / (2,3,2,4) / (1,4,5,6) / (5,2,5,3); frozen from a hand
// peeling derivation checked against all 52 clue values.
inline rk::GridValues fig2plus3_grid() {
  rk::GridValues g = rk::zero_grid(rk::LatticeDims(4, 4));
  const int top_first[4][4] = {
      {8, 7, 3, 2}, {2, 3, 2, 4}, {1, 4, 5, 6}, {5, 2, 5, 3}};
  for (int r = 0; r < 4; ++r)
    for (int i = 1; i <= 4; ++i)
      g.at(rk::Cell{i, 4 - r}) = top_first[r][i - 1];
  return g;
}

}  // namespace rkt
