#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/naive_elim.hpp"
#include "rk/linalg.hpp"
#include "rk/puzzle_io.hpp"
#include "rk/uniqueness.hpp"

using namespace rk;

namespace {

RationalMatrix clue_system(const LatticeDims& dims, Slope through) {
  return RationalMatrix::from_clue_matrix(
      build_coefficient_matrix(dims, slope_prefix(through)));
}

std::vector<BigRat> matvec(const RationalMatrix& m,
                          const std::vector<BigRat>& x) {
  std::vector<BigRat> out(m.rows(), BigRat(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (sgn(m.at(r, c)) != 0) out[r] += m.at(r, c) * x[c];
  return out;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<long>(rng() % 7) - 3;
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  RationalMatrix id(2, 2);
  id.at(0, 0) = 1;
  id.at(1, 1) = 1;
  CHECK(rank(id) == 2);

  const RationalMatrix zero(4, 3);
  CHECK(rank(zero) == 0);
  const auto basis = nullspace(zero);
  REQUIRE(basis.dim() == 3);
  for (int k = 0; k < 3; ++k)
    for (int c = 0; c < 3; ++c)
      CHECK(basis.vectors[k][c] == BigRat(k == c ? 1 : 0));
}

TEST_CASE("clue systems: 3x3 full rank, 4x4 deficient until -1/2") {
  CHECK(rank(clue_system(LatticeDims(3, 3), Slope::integer(1))) == 9);
  CHECK(rank(clue_system(LatticeDims(4, 4), Slope::integer(1))) < 16);
  CHECK(nullspace(clue_system(LatticeDims(4, 4), Slope::integer(1))).dim() >=
        1);
  CHECK(nullspace(clue_system(LatticeDims(4, 4), reduce_slope(-1, 2))).dim() ==
        0);
  CHECK(has_full_column_rank(clue_system(LatticeDims(4, 4),
                                         reduce_slope(-1, 2))));
  CHECK(rank(clue_system(LatticeDims(4, 4), reduce_slope(-1, 2))) == 16);
}

TEST_CASE("rank + nullity = cols, basis vectors are exact kernel elements") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 8);
    const RationalMatrix m = random_matrix(rng, rows, cols);
    const int r = rank(m);
    const NullSpaceBasis basis = nullspace(m);
    CHECK(r + basis.dim() == cols);
    for (const auto& v : basis.vectors) {
      const auto image = matvec(m, v);
      for (const auto& e : image) CHECK(sgn(e) == 0);
    }
  }
}

TEST_CASE("agrees with the independent rational Gauss-Jordan oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const RationalMatrix m = random_matrix(rng, rows, cols);
    const auto oracle = rkt::naive_eliminate(m, nullptr);
    CHECK(rank(m) == oracle.rank);
    const auto basis = nullspace(m);
    REQUIRE(basis.dim() == static_cast<int>(oracle.nullbasis.size()));
    for (int k = 0; k < basis.dim(); ++k)
      CHECK(basis.vectors[k] == oracle.nullbasis[k]);
  }
  // and on clue systems, where the certificate fast path must agree too
  std::vector<LatticeDims> lattices;
  for (int n = 1; n <= 5; ++n) lattices.push_back(LatticeDims(n, n));
  for (const LatticeDims& rect :
       {LatticeDims(2, 5), LatticeDims(5, 2), LatticeDims(4, 6),
        LatticeDims(6, 3)})
    lattices.push_back(rect);
  for (const LatticeDims& dims : lattices)
    for (std::int64_t idx = 0; idx <= 5; ++idx) {
      const RationalMatrix m = clue_system(dims, slope_at_index(idx));
      const auto oracle = rkt::naive_eliminate(m, nullptr);
      CHECK(rank(m) == oracle.rank);
      CHECK(has_full_column_rank(m) == (oracle.rank == m.cols()));
      const auto basis = nullspace(m);
      REQUIRE(basis.dim() == static_cast<int>(oracle.nullbasis.size()));
      for (int k = 0; k < basis.dim(); ++k)
        CHECK(basis.vectors[k] == oracle.nullbasis[k]);
    }
}

TEST_CASE("solve recovers membership of the seeded solution") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const RationalMatrix m = random_matrix(rng, rows, cols);
    std::vector<BigRat> x(cols);
    for (auto& v : x) v = static_cast<long>(rng() % 9) - 4;
    const auto rhs = matvec(m, x);
    const LinearSolution sol = solve(m, rhs);
    REQUIRE(sol.status != SolveStatus::inconsistent);
    // x - particular must be the unique combination of basis vectors given
    // by its free coordinates
    std::vector<BigRat> diff(cols);
    for (int c = 0; c < cols; ++c) diff[c] = x[c] - (*sol.particular)[c];
    std::vector<BigRat> combo(cols, BigRat(0));
    for (int k = 0; k < sol.nullbasis.dim(); ++k) {
      const auto& v = sol.nullbasis.vectors[k];
      // the vector's own free column: 1 here, 0 in every other basis vector
      int own = -1;
      for (int c = 0; c < cols && own < 0; ++c) {
        if (v[c] != BigRat(1)) continue;
        bool alone = true;
        for (int j = 0; j < sol.nullbasis.dim(); ++j)
          if (j != k && sgn(sol.nullbasis.vectors[j][c]) != 0) alone = false;
        if (alone) own = c;
      }
      REQUIRE(own >= 0);
      for (int c = 0; c < cols; ++c) combo[c] += diff[own] * v[c];
    }
    CHECK(combo == diff);
  }
}

TEST_CASE("solve matches the oracle on random systems") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const RationalMatrix m = random_matrix(rng, rows, cols);
    std::vector<BigRat> rhs(rows);
    for (auto& v : rhs) v = static_cast<long>(rng() % 9) - 4;
    const auto oracle = rkt::naive_eliminate(m, &rhs);
    const LinearSolution sol = solve(m, rhs);
    CHECK((sol.status == SolveStatus::inconsistent) == !oracle.consistent);
    if (oracle.consistent) {
      REQUIRE(sol.particular.has_value());
      CHECK(*sol.particular == oracle.particular);
    } else {
      CHECK_FALSE(sol.particular.has_value());
    }
  }
}

TEST_CASE("the fig1 clue system has the frozen unique solution") {
  const auto p = rkt::load_puzzle("fig1.rk");
  const auto cm = build_coefficient_matrix(p.dims, p.slopes);
  const auto sol =
      solve(RationalMatrix::from_clue_matrix(cm), clue_rhs(p, cm));
  REQUIRE(sol.status == SolveStatus::unique);
  CHECK(*sol.particular == rkt::fig1_grid().values);
}

TEST_CASE("conflicting aggregates are inconsistent") {
  const auto p = rkt::load_puzzle("fig1_inconsistent.rk");
  const auto cm = build_coefficient_matrix(p.dims, p.slopes);
  const auto sol =
      solve(RationalMatrix::from_clue_matrix(cm), clue_rhs(p, cm));
  CHECK(sol.status == SolveStatus::inconsistent);
  CHECK_FALSE(sol.particular.has_value());
}

TEST_CASE("fig2 alone is underdetermined") {
  const auto p = rkt::load_puzzle("fig2.rk");
  const auto cm = build_coefficient_matrix(p.dims, p.slopes);
  const auto sol =
      solve(RationalMatrix::from_clue_matrix(cm), clue_rhs(p, cm));
  REQUIRE(sol.status == SolveStatus::underdetermined);
  CHECK(sol.nullbasis.dim() >= 1);
}

TEST_CASE("solve rejects mismatched right-hand sides") {
  const RationalMatrix m(2, 2);
  CHECK_THROWS_AS(solve(m, std::vector<BigRat>(3, BigRat(0))),
                  std::invalid_argument);
}

TEST_CASE("identical inputs give identical outputs") {
  const RationalMatrix m = clue_system(LatticeDims(4, 4), Slope::integer(1));
  const auto a = nullspace(m);
  const auto b = nullspace(m);
  REQUIRE(a.dim() == b.dim());
  for (int k = 0; k < a.dim(); ++k) CHECK(a.vectors[k] == b.vectors[k]);
  CHECK(rank(m) == rank(m));
}
