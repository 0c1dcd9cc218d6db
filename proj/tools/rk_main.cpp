// rk — exact analysis, solving and certification of line-sum grid puzzles.
// Every subcommand is a thin shell over the rk core library; all numeric
// output is exact (rationals print as a/b).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rk/certifier.hpp"
#include "rk/clue_matrix.hpp"
#include "rk/lattice.hpp"
#include "rk/linalg.hpp"
#include "rk/puzzle_io.hpp"
#include "rk/slope.hpp"
#include "rk/symmetry.hpp"
#include "rk/uniqueness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

rk::Slope through_slope(const std::string& token) {
  const rk::Slope s = rk::parse_slope_token(token);
  if (!rk::has_order_index(s))
    throw std::invalid_argument(
        "--through needs an integer or reciprocal-of-integer slope, got '" +
        token + "'");
  return s;
}

int default_jobs() {
  if (const char* env = std::getenv("RK_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range must look like lo..hi, got '" + text +
                                "'");
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

int run_lines(int n, int m, const std::string& slope_token) {
  const rk::LatticeDims dims(n, m);
  const rk::Slope slope = rk::parse_slope_token(slope_token);
  for (const rk::Line& line : rk::enumerate_lines(dims, slope)) {
    std::cout << "line " << rk::slope_token(line.slope) << ' ' << line.offset
              << ':';
    for (const rk::Cell& c : line.cells)
      std::cout << " (" << c.i << ',' << c.j << ')';
    std::cout << '\n';
  }
  return kExitOk;
}

int run_matrix(int n, int m, const std::string& through) {
  const rk::LatticeDims dims(n, m);
  const auto slopes = rk::slope_prefix(through_slope(through));
  const rk::ClueMatrix cm = rk::build_coefficient_matrix(dims, slopes);
  const int r = rk::rank(rk::RationalMatrix::from_clue_matrix(cm));
  std::cout << "rows " << cm.rows() << '\n'
            << "cols " << cm.cols() << '\n'
            << "rank " << r << '\n'
            << "nullity " << cm.cols() - r << '\n';
  return kExitOk;
}

int run_solve(const std::string& path) {
  const rk::PuzzleInstance p = rk::parse_puzzle(read_file(path));
  const rk::ClueMatrix cm = rk::build_coefficient_matrix(p.dims, p.slopes);
  const rk::LinearSolution sol =
      rk::solve(rk::RationalMatrix::from_clue_matrix(cm), rk::clue_rhs(p, cm));
  if (sol.status == rk::SolveStatus::inconsistent) {
    std::cout << "inconsistent\n";
    return kExitUnsolvable;
  }
  rk::GridValues grid = rk::zero_grid(p.dims);
  grid.values = *sol.particular;
  if (sol.status == rk::SolveStatus::underdetermined)
    std::cout << "underdetermined(dim=" << sol.nullbasis.dim() << ")\n";
  std::cout << rk::render_grid(grid);
  return kExitOk;
}

int run_mask(int n, int m, const std::string& through) {
  const rk::LatticeDims dims(n, m);
  std::cout << rk::render_mask(rk::entry_uniqueness_mask(
      dims, rk::slope_prefix(through_slope(through))));
  return kExitOk;
}

int run_invariants(int n, int m, int max_q) {
  const rk::LatticeDims dims(n, m);
  const int cap = max_q > 0 ? max_q : rk::default_search_cap(dims);
  const rk::InvariantReport r = rk::uniqueness_invariants(dims, cap);
  std::cout << "whole_grid " << rk::slope_token(r.whole_grid) << '\n'
            << "row " << rk::slope_token(r.row) << '\n'
            << "column " << rk::slope_token(r.column) << '\n'
            << "border " << rk::slope_token(r.border) << '\n'
            << "min_row_column " << rk::slope_token(r.row_or_column) << '\n';
  return kExitOk;
}

int run_table(int max_n, int max_q, int jobs, const std::string& csv_path) {
  const auto rows = rk::search_table(max_n, max_q, jobs);
  std::ostringstream csv;
  csv << "n,minimal_slope,prefix_len,matrix_rows,rank\n";
  for (const rk::TableRow& row : rows) {
    std::cout << "n=" << row.n << " slope=" << rk::slope_token(row.minimal_slope)
              << " prefix_len=" << row.prefix_len << " rows=" << row.matrix_rows
              << " rank=" << row.rank << '\n';
    csv << row.n << ',' << rk::slope_token(row.minimal_slope) << ','
        << row.prefix_len << ',' << row.matrix_rows << ',' << row.rank << '\n';
  }
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  return kExitOk;
}

int run_certify(int n, const std::string& through, const std::string& log_path,
                bool transpose_closure) {
  const rk::LatticeDims dims(n, n);
  const auto slopes = rk::slope_prefix(through_slope(through));
  const rk::CertifiedSet cs =
      transpose_closure
          ? rk::propagate_with_transforms(dims, slopes, {},
                                          {rk::GridTransform::transpose})
          : rk::propagate(dims, slopes, {});
  const rk::UniquenessMask mask = rk::entry_uniqueness_mask(dims, slopes);
  bool sound = true;
  for (int j = 1; j <= dims.m; ++j)
    for (int i = 1; i <= dims.n; ++i)
      if (cs.is_determined(rk::Cell{i, j}) && !mask.at(rk::Cell{i, j}))
        sound = false;
  std::cout << "determined " << cs.determined_count() << " of "
            << dims.cell_count() << '\n'
            << "unique " << mask.unique_count() << " of " << dims.cell_count()
            << '\n'
            << "sound " << (sound ? "yes" : "no") << '\n';
  if (!log_path.empty()) {
    write_file(log_path, rk::derivation_log(cs));
    std::cout << "log " << log_path << '\n';
  }
  return sound ? kExitOk : kExitUnsolvable;
}

int run_generate(int n, int m, const std::string& through, std::uint64_t seed,
                 const std::string& range, const std::string& out_prefix) {
  const rk::LatticeDims dims(n, m);
  const auto [lo, hi] = parse_range(range);
  const rk::GridValues grid = rk::random_grid(dims, lo, hi, seed);
  const rk::PuzzleInstance p =
      rk::clues_from_grid(grid, rk::slope_prefix(through_slope(through)));
  write_file(out_prefix + ".grid", rk::serialize_grid(grid));
  write_file(out_prefix + ".rk", rk::serialize_puzzle(p));
  std::cout << "wrote " << out_prefix << ".grid\n"
            << "wrote " << out_prefix << ".rk\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for line-sum grid puzzles on integer lattices"};
  app.require_subcommand(1);

  int n = 1, m = 1, max_n = 1, max_q = 0;
  int jobs = default_jobs();
  std::string slope, through, path, csv_path, log_path, range = "1..9";
  std::string out_prefix = "puzzle";
  std::uint64_t seed = 0;
  bool transpose_closure = false;

  auto* lines = app.add_subcommand("lines", "list the clue lines of one slope");
  lines->add_option("n", n, "lattice width")->required();
  lines->add_option("m", m, "lattice height")->required();
  lines->add_option("slope", slope, "slope token, e.g. -1/2 or inf")
      ->required();

  auto* matrix =
      app.add_subcommand("matrix", "coefficient matrix size, rank, nullity");
  matrix->add_option("n", n)->required();
  matrix->add_option("m", m)->required();
  matrix->add_option("--through", through, "slope prefix endpoint")->required();

  auto* solve = app.add_subcommand("solve", "solve a puzzle file exactly");
  solve->add_option("file", path, "rk v1 puzzle file")->required();

  auto* mask = app.add_subcommand("mask", "render the per-cell uniqueness mask");
  mask->add_option("n", n)->required();
  mask->add_option("m", m)->required();
  mask->add_option("--through", through)->required();

  auto* invariants =
      app.add_subcommand("invariants", "minimal slope prefixes for uniqueness");
  invariants->add_option("n", n)->required();
  invariants->add_option("m", m)->required();
  invariants->add_option("--max-q", max_q, "search cap (0 = automatic)");

  auto* table = app.add_subcommand(
      "table", "minimal slope per lattice size, optionally as CSV");
  table->add_option("--max-n", max_n, "largest lattice size")->required();
  table->add_option("--max-q", max_q, "search cap (0 = automatic)");
  table->add_option("--jobs", jobs, "worker threads (default $RK_JOBS or 1)");
  table->add_option("--csv", csv_path, "also write CSV here");

  auto* certify = app.add_subcommand(
      "certify", "combinatorial certification vs the algebraic mask");
  certify->add_option("n", n)->required();
  certify->add_option("--through", through)->required();
  certify->add_option("--log", log_path, "write the derivation log here");
  certify->add_flag("--transpose-closure", transpose_closure,
                    "also transport determined cells across the diagonal");

  auto* generate = app.add_subcommand(
      "generate", "random grid plus its full clue set, written to files");
  generate->add_option("n", n)->required();
  generate->add_option("m", m)->required();
  generate->add_option("--through", through)->required();
  generate->add_option("--seed", seed);
  generate->add_option("--range", range, "value range lo..hi");
  generate->add_option("--out", out_prefix, "output path prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(lines)) return run_lines(n, m, slope);
    if (app.got_subcommand(matrix)) return run_matrix(n, m, through);
    if (app.got_subcommand(solve)) return run_solve(path);
    if (app.got_subcommand(mask)) return run_mask(n, m, through);
    if (app.got_subcommand(invariants)) return run_invariants(n, m, max_q);
    if (app.got_subcommand(table))
      return run_table(max_n, max_q, jobs, csv_path);
    if (app.got_subcommand(certify))
      return run_certify(n, through, log_path, transpose_closure);
    if (app.got_subcommand(generate))
      return run_generate(n, m, through, seed, range, out_prefix);
  } catch (const rk::SearchCapExceeded& e) {
    std::cerr << "rk: " << e.what() << '\n';
    return kExitUnsolvable;
  } catch (const rk::ParseError& e) {
    std::cerr << "rk: " << path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rk: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
