#include "rk/certifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rk/clue_matrix.hpp"

namespace rk {

Staircase::Staircase(std::vector<int> w) : weights(std::move(w)) {
  for (int v : weights)
    if (v < 0) throw std::invalid_argument("staircase weights must be >= 0");
}

int Staircase::sum(int i, int j) const {
  if (i > j) return 0;  // empty sum
  if (i < 1 || j > length())
    throw std::out_of_range("staircase partial sum indices out of range");
  return std::accumulate(weights.begin() + (i - 1), weights.begin() + j, 0);
}

bool StaircaseRegion::contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c,
                            [](const Cell& a, const Cell& b) {
                              return std::pair(a.j, a.i) < std::pair(b.j, b.i);
                            });
}

StaircaseRegion region_of(const Staircase& w, const LatticeDims& dims) {
  const int m = w.length();
  if (m > dims.m || w.sum(1, m) > dims.n)
    throw std::invalid_argument("staircase exceeds lattice");
  StaircaseRegion region{dims, {}};
  for (int b = 1; b <= m; ++b) {
    const int width = w.sum(b, m);
    for (int a = 1; a <= width; ++a) region.cells.push_back(Cell{a, b});
  }
  return region;
}

bool staircase_step_ok(const Staircase& w, int j, int q) {
  const int m = w.length();
  if (j < 1 || j > m + 1)
    throw std::invalid_argument("step column out of range");
  if (q < 1) throw std::invalid_argument("slope level must be >= 1");
  for (int t = 1; t <= m - j + 1; ++t)
    if (t * q < w.sum(j, j + t - 1) + 1) return false;
  for (int t = 1; t <= j - 1; ++t)
    if (t * q + 1 > w.sum(j - t, j - 1)) return false;
  return true;
}

bool staircase_step_ok_monotone(const Staircase& w, int m0, int j, int q) {
  const int m = w.length();
  if (m0 < 1 || m0 > m)
    throw std::invalid_argument("monotone span out of range");
  for (int i = 2; i <= m0; ++i)
    if (w.weights[i - 1] > w.weights[i - 2])
      throw std::invalid_argument("weights are not non-increasing");
  for (int i = m0 + 1; i <= m; ++i)
    if (w.weights[i - 1] > 1)
      throw std::invalid_argument("tail weights must be 0 or 1");
  if (j < 1 || j > m0 + 1)
    throw std::invalid_argument("step column out of range");
  if (q < 1) throw std::invalid_argument("slope level must be >= 1");

  const int wj = j <= m ? w.weights[j - 1] : 0;
  if (q < wj + 1) return false;
  if (j == 1) return true;  // w_0 = +infinity: no upper constraint
  return q <= w.weights[j - 2] - 1;
}

namespace {

int canonical_length(int q) { return q + (q - 1) * (q + 2) / 2; }

}  // namespace

Staircase canonical_staircase(int q) {
  if (q < 2) throw std::invalid_argument("canonical staircase needs q >= 2");
  std::vector<int> w(canonical_length(q), 0);
  for (int i = 1; i <= q; ++i) w[i - 1] = q + 1 - i;
  for (int j = 2; j <= q; ++j) w[q + (j - 1) * (j + 2) / 2 - 1] = 1;
  return Staircase(std::move(w));
}

Staircase staircase_chain_member(int q, int t, int s) {
  if (q < 2) throw std::invalid_argument("staircase chain needs q >= 2");
  if (t >= 1 && t <= q) {
    if (s < 1 || s > q + 1 - t)
      throw std::invalid_argument("chain parameter s out of range");
    // The displayed length m(q-1) falls short of the referenced indices only
    // when q = 2; padding to q keeps the single-cell growth chain intact.
    const int len = std::max(canonical_length(q - 1), q);
    std::vector<int> w(len, 0);
    for (int i = 1; i <= len; ++i) {
      if (i <= q + 1 - t && i != s)
        w[i - 1] = q - i;
      else if ((i > q + 1 - t && i < q + 1) || i == s)
        w[i - 1] = q + 1 - i;
    }
    for (int j = 2; j <= q - 1; ++j)
      w[(q - 1) + (j - 1) * (j + 2) / 2 - 1] = 1;
    return Staircase(std::move(w));
  }
  const bool closing = (t == q + 1 && s == 1);
  const bool widening = (t == q + 2 && s >= 1 && s <= q);
  if (!closing && !widening)
    throw std::invalid_argument("chain parameters (t, s) out of range");
  const int len = (q - 1) + (q - 1) * (q + 2) / 2;
  std::vector<int> w(len, 0);
  if (closing) {
    for (int i = 1; i <= q - 1; ++i) w[i - 1] = q + 1 - i;
  } else {
    for (int i = 1; i <= q; ++i)
      w[i - 1] = (i == q - s) ? q - i : q + 1 - i;
  }
  for (int j = 2; j <= q; ++j) w[(q - 1) + (j - 1) * (j + 2) / 2 - 1] = 1;
  return Staircase(std::move(w));
}

int CertifiedSet::determined_count() const {
  return static_cast<int>(
      std::count_if(determined.begin(), determined.end(),
                    [](std::uint8_t d) { return d != 0; }));
}

namespace {

struct PeelState {
  LatticeDims dims;
  std::vector<Line> lines;
  std::vector<std::vector<int>> lines_of_cell;  // cell_index -> line indices
  std::vector<int> open_count;                  // per line
};

PeelState build_peel_state(const LatticeDims& dims,
                           const std::vector<Slope>& slopes) {
  PeelState st;
  st.dims = dims;
  for (const Slope& s : slopes) {
    auto group = enumerate_lines(dims, s);
    st.lines.insert(st.lines.end(), std::make_move_iterator(group.begin()),
                    std::make_move_iterator(group.end()));
  }
  st.lines_of_cell.resize(dims.cell_count());
  st.open_count.resize(st.lines.size());
  for (int li = 0; li < static_cast<int>(st.lines.size()); ++li) {
    st.open_count[li] = static_cast<int>(st.lines[li].cells.size());
    for (const Cell& c : st.lines[li].cells)
      st.lines_of_cell[cell_index(dims, c)].push_back(li);
  }
  return st;
}

void mark_determined(PeelState& st, CertifiedSet& cs, Cell c) {
  const int idx = cell_index(st.dims, c);
  cs.determined[idx] = 1;
  for (int li : st.lines_of_cell[idx]) --st.open_count[li];
}

// Frozen scan: first line (slope order, then offset) with exactly one open
// cell fires, then the scan restarts from the top.
void run_peeling(PeelState& st, CertifiedSet& cs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int li = 0; li < static_cast<int>(st.lines.size()); ++li) {
      if (st.open_count[li] != 1) continue;
      const Line& line = st.lines[li];
      for (const Cell& c : line.cells) {
        if (cs.is_determined(c)) continue;
        cs.derivation.push_back(DerivationStep{
            DerivationStep::Via::line, c, line.slope, line.offset,
            GridTransform::rot180, Cell{}});
        mark_determined(st, cs, c);
        break;
      }
      changed = true;
      break;
    }
  }
}

CertifiedSet seeded_set(const LatticeDims& dims, std::vector<Slope> slopes,
                        const std::vector<Cell>& initial) {
  std::sort(slopes.begin(), slopes.end(), slope_less);
  if (std::adjacent_find(slopes.begin(), slopes.end()) != slopes.end())
    throw std::invalid_argument("duplicate slope in slope set");
  CertifiedSet cs;
  cs.dims = dims;
  cs.slopes = std::move(slopes);
  cs.determined.assign(dims.cell_count(), 0);
  for (const Cell& c : initial) {
    if (!contains(dims, c))
      throw std::invalid_argument("initial cell outside lattice");
    cs.determined[cell_index(dims, c)] = 1;
  }
  return cs;
}

}  // namespace

CertifiedSet propagate(const LatticeDims& dims, std::vector<Slope> slopes,
                       const std::vector<Cell>& initial) {
  CertifiedSet cs = seeded_set(dims, std::move(slopes), initial);
  PeelState st = build_peel_state(dims, cs.slopes);
  for (int idx = 0; idx < dims.cell_count(); ++idx)
    if (cs.determined[idx])
      for (int li : st.lines_of_cell[idx]) --st.open_count[li];
  run_peeling(st, cs);
  return cs;
}

CertifiedSet propagate_with_transforms(const LatticeDims& dims,
                                       std::vector<Slope> slopes,
                                       const std::vector<Cell>& initial,
                                       const std::vector<GridTransform>& tfs) {
  CertifiedSet cs = seeded_set(dims, std::move(slopes), initial);
  PeelState st = build_peel_state(dims, cs.slopes);
  for (int idx = 0; idx < dims.cell_count(); ++idx)
    if (cs.determined[idx])
      for (int li : st.lines_of_cell[idx]) --st.open_count[li];

  bool grew = true;
  while (grew) {
    const int before = cs.determined_count();
    run_peeling(st, cs);
    for (GridTransform t : tfs) {
      for (int idx = 0; idx < dims.cell_count(); ++idx) {
        if (!cs.determined[idx]) continue;
        const Cell source = cell_at(dims, idx);
        const Cell image = transform_cell(t, dims, source);
        if (cs.is_determined(image)) continue;
        cs.derivation.push_back(DerivationStep{DerivationStep::Via::transform,
                                               image, Slope::integer(0), 0, t,
                                               source});
        mark_determined(st, cs, image);
      }
    }
    grew = cs.determined_count() > before;
  }
  return cs;
}

std::string derivation_log(const CertifiedSet& cs) {
  std::ostringstream out;
  for (const DerivationStep& step : cs.derivation) {
    out << '(' << step.cell.i << ',' << step.cell.j << ") <- ";
    if (step.via == DerivationStep::Via::line)
      out << slope_token(step.slope) << ' ' << step.offset;
    else
      out << to_string(step.transform) << " (" << step.source.i << ','
          << step.source.j << ')';
    out << '\n';
  }
  return out.str();
}

std::int64_t certified_size_bound(int q, int variant) {
  if (q < 2) throw std::invalid_argument("size bound needs q >= 2");
  const std::int64_t qq = q;
  switch (variant) {
    case 1: return qq * qq + 2 * qq - 3;
    case 2: return qq * qq + 2 * qq - 2;
    case 3: return qq * qq + 3 * qq - 2;
    case 4: return qq * qq + 3 * qq - 1;
    default: throw std::invalid_argument("variant must be 1..4");
  }
}

std::int64_t certified_size_bound_parts(int q, int variant) {
  if (q < 2) throw std::invalid_argument("size bound needs q >= 2");
  const std::int64_t qq = q;
  // Row widths of the constructions involved: the canonical staircase at
  // level k spans (k^2+3k-2)/2 cells of the first row, the one-sided chain
  // end spans k-2 + k(k+1)/2.
  const std::int64_t full_q = (qq * qq + 3 * qq - 2) / 2;
  const std::int64_t full_prev = ((qq - 1) * (qq - 1) + 3 * (qq - 1) - 2) / 2;
  const std::int64_t one_sided = qq - 2 + qq * (qq + 1) / 2;
  switch (variant) {
    case 1: return one_sided + full_prev + 1;
    case 2: return full_q + full_prev + 1;
    case 3: return full_q + one_sided + 1;
    case 4: return 2 * (qq + (qq - 1) * (qq + 2) / 2) + 1;
    default: throw std::invalid_argument("variant must be 1..4");
  }
}

}  // namespace rk
