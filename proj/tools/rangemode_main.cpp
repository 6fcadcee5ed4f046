#include <cstdio>
#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "rangemode/bench.hpp"
#include "rangemode/counting.hpp"
#include "rangemode/errors.hpp"
#include "rangemode/grid.hpp"
#include "rangemode/io.hpp"
#include "rangemode/low_frequency_mode.hpp"
#include "rangemode/occurrence_index.hpp"
#include "rangemode/ranked_array.hpp"
#include "rangemode/sparse_frequency_table.hpp"
#include "rangemode/sparse_mode_table.hpp"
#include "rangemode/verify.hpp"

namespace {

using namespace rangemode;

constexpr std::uint64_t kExhaustiveRangeCap = 2048ull * 2049 / 2;

struct Options {
  std::string structure;
  double epsilon = 0.5;
  std::int64_t block = 0;
  std::string array_path;
  std::string query_path;
  bool exhaustive = false;
  bool csv = false;
  std::uint64_t n = 0;
  std::uint32_t k = 1;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  std::vector<Index> dims;
};

std::uint32_t checked_block(std::int64_t block) {
  if (block < 0) throw UsageError("--block-size must be >= 0 (0 = auto)");
  return static_cast<std::uint32_t>(block);
}

bool is_grid_structure(const std::string& name) {
  return name == "grid" || name == "grid-counting";
}

bool known_structure(const std::string& name) {
  return name == "sparse-mode" || name == "sparse-freq" || name == "low-freq" ||
         name == "counting" || is_grid_structure(name);
}

int cmd_query(const Options& opt) {
  if (!known_structure(opt.structure))
    throw UsageError("unknown structure: " + opt.structure);
  LoadedArray data = load_array(opt.array_path);
  const auto rows = load_query_rows(opt.query_path);
  std::string out;

  if (std::holds_alternative<RankedArray>(data)) {
    if (is_grid_structure(opt.structure)) {
      throw UsageError("structure '" + opt.structure +
                       "' needs a grid dataset (dims header)");
    }
    const RankedArray& ra = std::get<RankedArray>(data);
    std::optional<OccurrenceIndex> oi;
    std::optional<SparseModeTable> smt;
    std::optional<SparseFrequencyTable> sft;
    std::optional<LowFrequencyStructure> lfs;
    if (opt.structure == "sparse-mode") {
      oi.emplace(ra);
      smt.emplace(ra, *oi, opt.epsilon);
    } else if (opt.structure == "sparse-freq") {
      sft.emplace(ra, checked_block(opt.block));
    } else if (opt.structure == "low-freq") {
      oi.emplace(ra);
      lfs.emplace(ra, *oi, checked_block(opt.block));
    }

    Workspace ws;
    for (const auto& row : rows) {
      if (row.size() != 2)
        throw UsageError("1-D query lines need exactly two indices");
      if (row[0] < 1 || row[1] < row[0] ||
          row[1] > static_cast<Token>(ra.size())) {
        out += "ERR invalid-range\n";
        continue;
      }
      QueryRange r{static_cast<Index>(row[0]), static_cast<Index>(row[1])};
      ModeAnswer ans;
      if (smt)
        ans = smt->query(r, ws);
      else if (sft)
        ans = sft->query(r, ws);
      else if (lfs)
        ans = lfs->query(r, ws);
      else
        ans = counting_query(ra, ws, r);
      out += std::to_string(ans.element) + "\t" +
             std::to_string(ans.frequency) + "\n";
    }
  } else {
    if (!is_grid_structure(opt.structure)) {
      throw UsageError("structure '" + opt.structure +
                       "' needs a 1-D dataset");
    }
    const GridArray& ga = std::get<GridArray>(data);
    const int d = ga.dim_count();
    std::optional<FrequencyGrid> fg;
    if (opt.structure == "grid") fg.emplace(ga);

    Workspace ws;
    for (const auto& row : rows) {
      if (row.size() != 2 * static_cast<std::size_t>(d))
        throw UsageError("grid query lines need 2*d indices");
      GridRange r;
      r.lo.fill(1);
      r.hi.fill(1);
      bool ok = true;
      for (int l = 0; l < d; ++l) {
        Token lo = row[l], hi = row[d + l];
        if (lo < 1 || hi < lo || hi > static_cast<Token>(ga.extent(l))) {
          ok = false;
          break;
        }
        r.lo[l] = static_cast<Index>(lo);
        r.hi[l] = static_cast<Index>(hi);
      }
      if (!ok) {
        out += "ERR invalid-range\n";
        continue;
      }
      ModeAnswer ans = fg ? fg->query(r, ws) : counting_query(ga, ws, r);
      out += std::to_string(ans.element) + "\t" +
             std::to_string(ans.frequency) + "\n";
    }
  }
  std::fwrite(out.data(), 1, out.size(), stdout);
  return 0;
}

int cmd_verify(const Options& opt) {
  LoadedArray data = load_array(opt.array_path);
  VerifyReport report;

  if (std::holds_alternative<RankedArray>(data)) {
    const RankedArray& ra = std::get<RankedArray>(data);
    std::vector<QueryRange> ranges;
    if (opt.exhaustive) {
      if (ra.size() > 2048)
        throw UsageError("--exhaustive supports n <= 2048");
      ranges = all_ranges(ra.size());
    } else {
      if (opt.query_path.empty())
        throw UsageError("verify needs --queries or --exhaustive");
      for (const auto& row : load_query_rows(opt.query_path)) {
        if (row.size() != 2)
          throw UsageError("1-D query lines need exactly two indices");
        if (row[0] < 1 || row[1] < row[0] ||
            row[1] > static_cast<Token>(ra.size()))
          continue;  // unverifiable line, not a structure defect
        ranges.push_back(
            {static_cast<Index>(row[0]), static_cast<Index>(row[1])});
      }
    }
    OccurrenceIndex oi(ra);
    SparseModeTable smt(ra, oi, opt.epsilon);
    SparseFrequencyTable sft(ra, checked_block(opt.block));
    LowFrequencyStructure lfs(ra, oi, checked_block(opt.block));
    report = verify_flat(ra, oi, smt, sft, lfs, ranges);
  } else {
    const GridArray& ga = std::get<GridArray>(data);
    std::vector<GridRange> ranges;
    if (opt.exhaustive) {
      if (count_grid_ranges(ga) > kExhaustiveRangeCap)
        throw UsageError("--exhaustive range count exceeds the cap");
      ranges = all_grid_ranges(ga);
    } else {
      if (opt.query_path.empty())
        throw UsageError("verify needs --queries or --exhaustive");
      const int d = ga.dim_count();
      for (const auto& row : load_query_rows(opt.query_path)) {
        if (row.size() != 2 * static_cast<std::size_t>(d))
          throw UsageError("grid query lines need 2*d indices");
        GridRange r;
        r.lo.fill(1);
        r.hi.fill(1);
        bool ok = true;
        for (int l = 0; l < d; ++l) {
          Token lo = row[l], hi = row[d + l];
          if (lo < 1 || hi < lo || hi > static_cast<Token>(ga.extent(l))) {
            ok = false;
            break;
          }
          r.lo[l] = static_cast<Index>(lo);
          r.hi[l] = static_cast<Index>(hi);
        }
        if (ok) ranges.push_back(r);
      }
    }
    FrequencyGrid fg(ga);
    report = verify_grid(ga, fg, ranges);
  }

  if (report.pass) {
    std::cout << "PASS " << report.ranges_checked << " ranges\n";
    return 0;
  }
  std::cout << "FAIL after " << report.ranges_checked
            << " ranges: " << report.counterexample << "\n";
  return 1;
}

int cmd_bench(const Options& opt) {
  BenchConfig config;
  config.structure = opt.structure;
  config.n = opt.n;
  config.k = opt.k;
  config.epsilon = opt.epsilon;
  config.block = checked_block(opt.block);
  config.query_count = opt.count;
  config.seed = opt.seed;
  config.dims = opt.dims;
  const BenchRecord record = run_bench(config);
  if (opt.csv) {
    std::cout << bench_csv_header() << "\n" << to_csv(record) << "\n";
  } else {
    std::cout << "structure        " << record.structure << "\n"
              << "n                " << record.n << "\n"
              << "k                " << record.k << "\n"
              << "param            " << record.param << "\n"
              << "build_ns         " << record.build_ns << "\n"
              << "p50_query_ns     " << record.p50_query_ns << "\n"
              << "max_cells        " << record.max_cells_touched << "\n"
              << "seed             " << record.seed << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"range mode query toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_structure_params = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon", opt.epsilon,
                    "sparse-mode block exponent in [0, 1/2]");
    cmd->add_option("--block-size", opt.block,
                    "block size for sparse-freq/low-freq (0 = auto)");
  };

  CLI::App* query = app.add_subcommand("query", "answer queries from a file");
  query->add_option("--structure", opt.structure)->required();
  query->add_option("--array", opt.array_path)->required();
  query->add_option("--queries", opt.query_path)->required();
  add_structure_params(query);

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check structures against the oracle");
  verify->add_option("--array", opt.array_path)->required();
  verify->add_option("--queries", opt.query_path);
  verify->add_flag("--exhaustive", opt.exhaustive,
                   "check every range (n <= 2048)");
  add_structure_params(verify);

  CLI::App* bench =
      app.add_subcommand("bench", "seeded synthetic benchmark, CSV metrics");
  bench->add_option("--structure", opt.structure)->required();
  bench->add_option("--n", opt.n);
  bench->add_option("--k", opt.k);
  bench->add_option("--count", opt.count);
  bench->add_option("--seed", opt.seed);
  bench->add_option("--dims", opt.dims, "grid extents")->delimiter(',');
  bench->add_flag("--csv", opt.csv, "emit the CSV header and record");
  add_structure_params(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (query->parsed()) return cmd_query(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return cmd_bench(opt);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory, aborting\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
