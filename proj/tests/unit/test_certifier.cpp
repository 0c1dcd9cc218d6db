#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "rk/certifier.hpp"
#include "rk/uniqueness.hpp"

using namespace rk;

namespace {

std::set<std::pair<int, int>> cell_set(const StaircaseRegion& region) {
  std::set<std::pair<int, int>> out;
  for (const Cell& c : region.cells) out.insert({c.i, c.j});
  return out;
}

std::set<std::pair<int, int>> determined_set(const CertifiedSet& cs) {
  std::set<std::pair<int, int>> out;
  for (int j = 1; j <= cs.dims.m; ++j)
    for (int i = 1; i <= cs.dims.n; ++i)
      if (cs.is_determined(Cell{i, j})) out.insert({i, j});
  return out;
}

std::set<std::pair<int, int>> transposed(
    const std::set<std::pair<int, int>>& cells) {
  std::set<std::pair<int, int>> out;
  for (const auto& [i, j] : cells) out.insert({j, i});
  return out;
}

// All weight sequences of the given length with entries 0..max_w.
void for_each_staircase(int length, int max_w,
                        const std::function<void(const Staircase&)>& fn) {
  std::vector<int> w(length, 0);
  for (;;) {
    fn(Staircase(w));
    int k = length - 1;
    while (k >= 0 && w[k] == max_w) w[k--] = 0;
    if (k < 0) return;
    ++w[k];
  }
}

}  // namespace

TEST_CASE("partial sums with the empty-sum convention") {
  const Staircase w({2, 1, 0, 1});
  CHECK(w.sum(1, 4) == 4);
  CHECK(w.sum(3, 4) == 1);
  CHECK(w.sum(2, 1) == 0);
  CHECK(w.sum(5, 4) == 0);
  CHECK_THROWS_AS(w.sum(0, 2), std::out_of_range);
  CHECK_THROWS_AS(w.sum(1, 5), std::out_of_range);
  CHECK_THROWS_AS(Staircase({1, -1}), std::invalid_argument);
}

TEST_CASE("step conditions on small staircases") {
  CHECK(staircase_step_ok(Staircase({0}), 1, 1));
  CHECK(staircase_step_ok(Staircase({1}), 1, 2));
  CHECK_FALSE(staircase_step_ok(Staircase({2, 2}), 2, 1));
  CHECK_THROWS_AS(staircase_step_ok(Staircase({1}), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(staircase_step_ok(Staircase({1}), 1, 0),
                  std::invalid_argument);
}

TEST_CASE("monotone shortcut examples") {
  CHECK(staircase_step_ok_monotone(Staircase({3, 1}), 2, 2, 2));
  CHECK(staircase_step_ok(Staircase({3, 1}), 2, 2));  // cross-check
  CHECK(staircase_step_ok_monotone(Staircase({1, 1}), 2, 1, 2));
  CHECK(staircase_step_ok(Staircase({1, 1}), 1, 2));
  for (int q = 1; q <= 5; ++q)
    CHECK_FALSE(staircase_step_ok_monotone(Staircase({2, 2}), 2, 2, q));
  // the column just past the monotone span reads its weight off the sequence
  CHECK(staircase_step_ok_monotone(Staircase({3, 1}), 1, 2, 2));
  CHECK(staircase_step_ok(Staircase({3, 1}), 2, 2));
  CHECK_FALSE(staircase_step_ok_monotone(Staircase({3, 1}), 1, 2, 3));
  // and past the end of the sequence the weight is 0
  CHECK(staircase_step_ok_monotone(Staircase({3, 2}), 2, 3, 1));
  CHECK_THROWS_AS(staircase_step_ok_monotone(Staircase({1, 2}), 2, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(staircase_step_ok_monotone(Staircase({3, 1, 2}), 2, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("the monotone shortcut implies the general conditions") {
  for (int m = 1; m <= 6; ++m)
    for_each_staircase(m, 4, [&](const Staircase& w) {
      for (int m0 = 1; m0 <= m; ++m0) {
        bool shaped = true;
        for (int i = 2; i <= m0; ++i)
          shaped = shaped && w.weights[i - 1] <= w.weights[i - 2];
        for (int i = m0 + 1; i <= m; ++i)
          shaped = shaped && w.weights[i - 1] <= 1;
        if (!shaped) continue;
        for (int j = 1; j <= m0 + 1; ++j)
          for (int q = 1; q <= 4; ++q)
            if (staircase_step_ok_monotone(w, m0, j, q))
              CHECK(staircase_step_ok(w, j, q));
      }
    });
}

TEST_CASE("canonical staircases") {
  CHECK(canonical_staircase(2) == Staircase({2, 1, 0, 1}));
  CHECK(canonical_staircase(3) == Staircase({3, 2, 1, 0, 1, 0, 0, 1}));
  CHECK(canonical_staircase(4).length() == 13);
  CHECK_THROWS_AS(canonical_staircase(1), std::invalid_argument);
}

TEST_CASE("regions from suffix sums") {
  const LatticeDims nine(9, 9);
  const auto region = region_of(canonical_staircase(2), nine);
  CHECK(region.cells.size() == 8);  // row widths 4, 2, 1, 1
  for (int a = 1; a <= 4; ++a) CHECK(region.contains(Cell{a, 1}));
  CHECK(region.contains(Cell{2, 2}));
  CHECK_FALSE(region.contains(Cell{3, 2}));
  CHECK(region.contains(Cell{1, 4}));
  CHECK_FALSE(region.contains(Cell{1, 5}));

  CHECK(region_of(Staircase({0}), nine).cells.empty());

  const auto full_row = region_of(Staircase({5}), LatticeDims(5, 5));
  REQUIRE(full_row.cells.size() == 5);
  for (int a = 1; a <= 5; ++a) CHECK(full_row.contains(Cell{a, 1}));

  CHECK_THROWS_AS(region_of(Staircase({6}), LatticeDims(5, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(region_of(Staircase({1, 1, 1}), LatticeDims(5, 2)),
                  std::invalid_argument);
}

TEST_CASE("chain member parameter validation and endpoints") {
  CHECK(staircase_chain_member(2, 3, 1) == Staircase({2, 0, 1}));
  CHECK_THROWS_AS(staircase_chain_member(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(staircase_chain_member(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(staircase_chain_member(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(staircase_chain_member(2, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(staircase_chain_member(1, 1, 1), std::invalid_argument);

  // first member: the level-1 region (a single cell) plus one cell
  const LatticeDims dims(9, 9);
  const auto first = cell_set(region_of(staircase_chain_member(2, 1, 1), dims));
  const auto base = cell_set(region_of(Staircase({1}), dims));
  CHECK(first.size() == base.size() + 1);
  CHECK(std::includes(first.begin(), first.end(), base.begin(), base.end()));
}

TEST_CASE("chain regions grow one cell at a time and close transposed") {
  for (int q = 2; q <= 4; ++q) {
    const int n = 2 * canonical_staircase(q).length() + 1;
    const LatticeDims dims(n, n);
    const auto region =
        [&](const Staircase& w) { return cell_set(region_of(w, dims)); };

    // lexicographic walk over the single-cell growth steps
    std::vector<std::pair<int, int>> params;
    for (int t = 1; t <= q; ++t)
      for (int s = 1; s <= q + 1 - t; ++s) params.push_back({t, s});

    auto prev = q == 2 ? region(Staircase({1}))
                       : region(canonical_staircase(q - 1));
    for (const auto& [t, s] : params) {
      const auto cur = region(staircase_chain_member(q, t, s));
      CHECK(cur.size() == prev.size() + 1);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }

    // the closing member is the union with the transposed region
    auto closed = prev;
    for (const auto& c : transposed(prev)) closed.insert(c);
    CHECK(region(staircase_chain_member(q, q + 1, 1)) == closed);

    prev = closed;
    for (int s = 1; s <= q; ++s) {
      const auto cur = region(staircase_chain_member(q, q + 2, s));
      CHECK(cur.size() == prev.size() + 1);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
    auto final_closed = prev;
    for (const auto& c : transposed(prev)) final_closed.insert(c);
    CHECK(region(canonical_staircase(q)) == final_closed);
  }
}

TEST_CASE("propagation fixpoints on the figure lattices") {
  const auto full = propagate(LatticeDims(3, 3),
                              slope_prefix(Slope::integer(1)), {});
  CHECK(full.determined_count() == 9);

  const auto stuck = propagate(LatticeDims(4, 4),
                               slope_prefix(Slope::integer(1)), {});
  CHECK(stuck.determined_count() == 4);  // the four corner singletons
  CHECK(stuck.determined_count() < 16);
  CHECK(stuck.is_determined(Cell{1, 1}));
  CHECK(stuck.is_determined(Cell{4, 4}));
  CHECK(stuck.is_determined(Cell{1, 4}));
  CHECK(stuck.is_determined(Cell{4, 1}));

  std::vector<Cell> everything;
  for (int j = 1; j <= 4; ++j)
    for (int i = 1; i <= 4; ++i) everything.push_back(Cell{i, j});
  const auto already =
      propagate(LatticeDims(4, 4), slope_prefix(Slope::integer(1)), everything);
  CHECK(already.determined_count() == 16);
  CHECK(already.derivation.empty());

  CHECK_THROWS_AS(
      propagate(LatticeDims(3, 3), {Slope::integer(0)}, {Cell{4, 1}}),
      std::invalid_argument);
}

TEST_CASE("derivation logs replay") {
  const auto cs =
      propagate(LatticeDims(9, 9), slope_prefix(Slope::integer(-2)), {});
  std::set<std::pair<int, int>> seen;
  for (const DerivationStep& step : cs.derivation) {
    REQUIRE(step.via == DerivationStep::Via::line);
    // the used line must have exactly the recorded cell outside `seen`
    const auto lines = enumerate_lines(cs.dims, step.slope);
    const auto it =
        std::find_if(lines.begin(), lines.end(), [&](const Line& l) {
          return l.offset == step.offset;
        });
    REQUIRE(it != lines.end());
    int open = 0;
    for (const Cell& c : it->cells)
      if (!seen.count({c.i, c.j})) ++open;
    CHECK(open == 1);
    CHECK_FALSE(seen.count({step.cell.i, step.cell.j}));
    seen.insert({step.cell.i, step.cell.j});
  }
  CHECK(static_cast<int>(seen.size()) == cs.determined_count());

  const std::string log = derivation_log(cs);
  CHECK(log.find(" <- ") != std::string::npos);
  CHECK(std::count(log.begin(), log.end(), '\n') ==
        static_cast<long>(cs.derivation.size()));
}

TEST_CASE("the fixpoint does not depend on scan order") {
  std::mt19937_64 rng(11);
  const LatticeDims dims(6, 6);
  const auto slopes = slope_prefix(Slope::integer(-2));
  const auto frozen = determined_set(propagate(dims, slopes, {}));

  // randomized-order peeling must reach the same set
  std::vector<Line> lines;
  for (const Slope& s : slopes) {
    auto group = enumerate_lines(dims, s);
    lines.insert(lines.end(), group.begin(), group.end());
  }
  for (int round = 0; round < 5; ++round) {
    std::shuffle(lines.begin(), lines.end(), rng);
    std::set<std::pair<int, int>> det;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Line& line : lines) {
        Cell open{0, 0};
        int open_count = 0;
        for (const Cell& c : line.cells)
          if (!det.count({c.i, c.j})) {
            open = c;
            ++open_count;
          }
        if (open_count == 1) {
          det.insert({open.i, open.j});
          changed = true;
        }
      }
    }
    CHECK(det == frozen);
  }
}

TEST_CASE("a passing step condition is honored by the peeling engine") {
  // seed the region, make the slope available, and the promised cell falls
  for (int m = 1; m <= 3; ++m)
    for_each_staircase(m, 2, [&](const Staircase& w) {
      for (int q = 1; q <= 3; ++q)
        for (int j = 1; j <= m + 1; ++j) {
          if (!staircase_step_ok(w, j, q)) continue;
          const int n = w.sum(1, m) + m + q + 2;  // room for the new cell
          const LatticeDims dims(n, n);
          const auto region = region_of(w, dims);
          const auto cs =
              propagate(dims, {reduce_slope(-1, q)}, region.cells);
          CHECK(cs.is_determined(Cell{w.sum(j, m) + 1, j}));
        }
    });
}

TEST_CASE("propagation is sound against the algebraic mask") {
  for (int n = 1; n <= 5; ++n)
    for (std::int64_t idx = 0; idx <= 5; ++idx) {
      const LatticeDims dims(n, n);
      const auto slopes = slope_prefix(slope_at_index(idx));
      const auto cs = propagate(dims, slopes, {});
      const auto mask = entry_uniqueness_mask(dims, slopes);
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          if (cs.is_determined(Cell{i, j})) CHECK(mask.at(Cell{i, j}));
    }
}

TEST_CASE("transpose transport certifies the level-2 canonical region") {
  const int n = 2 * canonical_staircase(2).length() + 1;  // 9
  const LatticeDims dims(n, n);
  const auto cs = propagate_with_transforms(
      dims, slope_prefix(Slope::integer(-2)), {},
      {GridTransform::transpose});
  const auto region = region_of(canonical_staircase(2), dims);
  for (const Cell& c : region.cells) CHECK(cs.is_determined(c));
}

TEST_CASE("certified size bounds") {
  CHECK(certified_size_bound(2, 4) == 9);
  CHECK(certified_size_bound(2, 2) == 6);
  CHECK(certified_size_bound(3, 1) == 12);
  CHECK(certified_size_bound(3, 4) == 17);
  CHECK_THROWS_AS(certified_size_bound(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(certified_size_bound(2, 5), std::invalid_argument);
  for (int q = 2; q <= 10; ++q) {
    for (int variant = 1; variant <= 4; ++variant)
      CHECK(certified_size_bound(q, variant) ==
            certified_size_bound_parts(q, variant));
    CHECK(2 * canonical_staircase(q).length() + 1 ==
          certified_size_bound(q, 4));
  }
}
