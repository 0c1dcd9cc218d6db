#include "rk/puzzle_io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace rk {

GridValues zero_grid(const LatticeDims& dims) {
  return GridValues{dims,
                    std::vector<BigRat>(dims.cell_count(), BigRat(0))};
}

BigRat parse_rational(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty rational token");
  const auto slash = token.find('/');
  const auto digits_ok = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    return std::all_of(t.begin(), t.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string_view::npos) {
    if (!digits_ok(token))
      throw std::invalid_argument("malformed value '" + std::string(token) +
                                  "'");
    return BigRat(std::string(token));
  }
  const std::string_view num = token.substr(0, slash);
  const std::string_view den = token.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw std::invalid_argument("malformed value '" + std::string(token) + "'");
  BigRat v{std::string(token)};
  if (sgn(BigInt(v.get_den())) == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(token) +
                                "'");
  v.canonicalize();
  return v;
}

std::string rational_token(const BigRat& value) { return value.get_str(); }

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.emplace_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

// Strips the comment tail and splits into (line number, tokens), dropping
// blank lines.
std::vector<std::pair<int, std::vector<std::string>>> logical_lines(
    std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.emplace_back(lineno, std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int parse_bounded_int(const std::string& tok, int lineno, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, std::string("malformed ") + what + " '" + tok +
                                 "'");
  return value;
}

std::int64_t parse_offset(const std::string& tok, int lineno) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "malformed offset '" + tok + "'");
  return value;
}

}  // namespace

PuzzleInstance parse_puzzle(std::string_view text) {
  const auto lines = logical_lines(text);
  std::size_t at = 0;
  const auto next = [&]() -> const std::pair<int, std::vector<std::string>>& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().first,
                       "unexpected end of input");
    return lines[at++];
  };

  {
    const auto& [lineno, tokens] = next();
    if (tokens.size() != 2 || tokens[0] != "rk" || tokens[1] != "v1")
      throw ParseError(lineno, "expected header 'rk v1'");
  }

  PuzzleInstance p;
  {
    const auto& [lineno, tokens] = next();
    if (tokens.size() != 3 || tokens[0] != "dims")
      throw ParseError(lineno, "expected 'dims <n> <m>'");
    const int n = parse_bounded_int(tokens[1], lineno, "dimension");
    const int m = parse_bounded_int(tokens[2], lineno, "dimension");
    if (n < 1 || m < 1) throw ParseError(lineno, "dimensions must be >= 1");
    p.dims = LatticeDims(n, m);
  }

  std::map<ClueKey, int, ClueKeyLess> expected;  // offset -> declaration order
  {
    const auto& [lineno, tokens] = next();
    if (tokens.size() < 2 || tokens[0] != "slopes")
      throw ParseError(lineno, "expected 'slopes <tok>...'");
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      Slope s = Slope::integer(0);
      try {
        s = parse_slope_token(tokens[k]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      p.slopes.push_back(s);
    }
    std::sort(p.slopes.begin(), p.slopes.end(), slope_less);
    if (std::adjacent_find(p.slopes.begin(), p.slopes.end()) !=
        p.slopes.end())
      throw ParseError(lineno, "duplicate slope");
    for (const Slope& s : p.slopes)
      for (const Line& line : enumerate_lines(p.dims, s))
        expected.emplace(ClueKey{s, line.offset}, 0);
  }

  while (at < lines.size()) {
    const auto& [lineno, tokens] = next();
    if (tokens.size() != 4 || tokens[0] != "clue")
      throw ParseError(lineno, "expected 'clue <tok> <offset> <value>'");
    Slope s = Slope::integer(0);
    try {
      s = parse_slope_token(tokens[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    if (!std::binary_search(p.slopes.begin(), p.slopes.end(), s,
                            slope_less))
      throw ParseError(lineno, "clue slope " + tokens[1] + " not declared");
    const std::int64_t offset = parse_offset(tokens[2], lineno);
    const ClueKey key{s, offset};
    if (!expected.count(key))
      throw ParseError(lineno, "offset " + tokens[2] +
                                   " not realizable for slope " + tokens[1]);
    if (p.clues.count(key))
      throw ParseError(lineno, "duplicate clue for slope " + tokens[1] +
                                   " offset " + tokens[2]);
    try {
      p.clues.emplace(key, parse_rational(tokens[3]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }

  for (const auto& [key, unused] : expected) {
    (void)unused;
    if (!p.clues.count(key))
      throw ParseError(
          lines.empty() ? 1 : lines.back().first,
          "missing clue for slope " + slope_token(key.slope) + " offset " +
              std::to_string(key.offset));
  }
  return p;
}

std::string serialize_puzzle(const PuzzleInstance& p) {
  std::ostringstream out;
  out << "rk v1\n";
  out << "dims " << p.dims.n << ' ' << p.dims.m << '\n';
  out << "slopes";
  for (const Slope& s : p.slopes) out << ' ' << slope_token(s);
  out << '\n';
  for (const auto& [key, value] : p.clues)
    out << "clue " << slope_token(key.slope) << ' ' << key.offset << ' '
        << rational_token(value) << '\n';
  return out.str();
}

PuzzleInstance clues_from_grid(const GridValues& grid,
                               std::vector<Slope> slopes) {
  std::sort(slopes.begin(), slopes.end(), slope_less);
  if (std::adjacent_find(slopes.begin(), slopes.end()) != slopes.end())
    throw std::invalid_argument("duplicate slope in slope set");
  PuzzleInstance p;
  p.dims = grid.dims;
  p.slopes = std::move(slopes);
  for (const Slope& s : p.slopes) {
    for (const Line& line : enumerate_lines(grid.dims, s)) {
      BigRat total(0);
      for (const Cell& c : line.cells) total += grid.at(c);
      p.clues.emplace(ClueKey{s, line.offset}, std::move(total));
    }
  }
  return p;
}

std::vector<BigRat> clue_rhs(const PuzzleInstance& p, const ClueMatrix& cm) {
  if (!(cm.dims == p.dims) || cm.slopes != p.slopes)
    throw std::invalid_argument(
        "coefficient matrix does not match the puzzle's dims and slopes");
  std::vector<BigRat> rhs;
  rhs.reserve(cm.lines.size());
  for (const Line& line : cm.lines)
    rhs.push_back(p.clues.at(ClueKey{line.slope, line.offset}));
  return rhs;
}

ValidationReport validate(const PuzzleInstance& p) {
  ValidationReport report;
  for (const Slope& s : p.slopes) {
    BigRat total(0);
    for (const auto& [key, value] : p.clues)
      if (key.slope == s) total += value;
    report.totals.push_back(SlopeTotal{s, total});
  }
  for (std::size_t k = 1; k < report.totals.size(); ++k) {
    if (report.totals[k].total != report.totals[0].total) {
      report.totals_agree = false;
      report.notes.push_back(
          "slope totals differ: " + slope_token(report.totals[0].slope) +
          " sums to " + rational_token(report.totals[0].total) + " but " +
          slope_token(report.totals[k].slope) + " sums to " +
          rational_token(report.totals[k].total) +
          "; the instance is unsolvable");
    }
  }
  return report;
}

GridValues random_grid(const LatticeDims& dims, std::int64_t lo,
                       std::int64_t hi, std::uint64_t seed) {
  if (lo > hi) throw std::invalid_argument("empty value range");
  std::mt19937_64 engine(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection sampling keeps the draw uniform and reproducible everywhere
  const std::uint64_t limit =
      span == 0 ? 0 : std::mt19937_64::max() - std::mt19937_64::max() % span;
  GridValues grid = zero_grid(dims);
  for (int idx = 0; idx < dims.cell_count(); ++idx) {
    std::uint64_t draw;
    do {
      draw = engine();
    } while (limit != 0 && draw >= limit);
    const std::int64_t value =
        lo + static_cast<std::int64_t>(span == 0 ? draw : draw % span);
    grid.values[idx] = BigRat(static_cast<long>(value));
  }
  return grid;
}

namespace {

std::string render_rows(const LatticeDims& dims,
                        const std::vector<std::string>& cell_text) {
  std::size_t width = 0;
  for (const std::string& t : cell_text) width = std::max(width, t.size());
  std::ostringstream out;
  for (int j = dims.m; j >= 1; --j) {
    for (int i = 1; i <= dims.n; ++i) {
      if (i > 1) out << ' ';
      const std::string& t = cell_text[cell_index(dims, Cell{i, j})];
      out << std::string(width - t.size(), ' ') << t;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_grid(const GridValues& grid) {
  std::vector<std::string> text(grid.dims.cell_count());
  for (int idx = 0; idx < grid.dims.cell_count(); ++idx)
    text[idx] = rational_token(grid.values[idx]);
  return render_rows(grid.dims, text);
}

std::string render_mask(const UniquenessMask& mask) {
  std::ostringstream out;
  for (int j = mask.dims.m; j >= 1; --j) {
    for (int i = 1; i <= mask.dims.n; ++i)
      out << (mask.at(Cell{i, j}) ? '#' : '.');
    out << '\n';
  }
  return out.str();
}

GridValues parse_grid(std::string_view text) {
  const auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, "expected 'grid <n> <m>'");
  const auto& [header_line, header] = lines[0];
  if (header.size() != 3 || header[0] != "grid")
    throw ParseError(header_line, "expected 'grid <n> <m>'");
  const int n = parse_bounded_int(header[1], header_line, "dimension");
  const int m = parse_bounded_int(header[2], header_line, "dimension");
  if (n < 1 || m < 1)
    throw ParseError(header_line, "dimensions must be >= 1");
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError(lines.back().first,
                     "expected " + std::to_string(m) + " grid rows");
  GridValues grid = zero_grid(LatticeDims(n, m));
  for (int r = 1; r <= m; ++r) {
    const auto& [lineno, tokens] = lines[r];
    if (static_cast<int>(tokens.size()) != n)
      throw ParseError(lineno,
                       "expected " + std::to_string(n) + " values in row");
    const int j = m - r + 1;  // top row first
    for (int i = 1; i <= n; ++i) {
      try {
        grid.at(Cell{i, j}) = parse_rational(tokens[i - 1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    }
  }
  return grid;
}

std::string serialize_grid(const GridValues& grid) {
  std::ostringstream out;
  out << "grid " << grid.dims.n << ' ' << grid.dims.m << '\n';
  for (int j = grid.dims.m; j >= 1; --j) {
    for (int i = 1; i <= grid.dims.n; ++i) {
      if (i > 1) out << ' ';
      out << rational_token(grid.at(Cell{i, j}));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rk
