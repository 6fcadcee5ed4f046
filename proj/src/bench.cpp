#include "rangemode/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>

#include "rangemode/counting.hpp"
#include "rangemode/errors.hpp"
#include "rangemode/grid.hpp"
#include "rangemode/low_frequency_mode.hpp"
#include "rangemode/occurrence_index.hpp"
#include "rangemode/random.hpp"
#include "rangemode/sparse_frequency_table.hpp"
#include "rangemode/sparse_mode_table.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start)
      .count();
}

std::string format_param(double epsilon) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", epsilon);
  return buf;
}

std::vector<Token> random_tokens(SeededRng& rng, std::uint64_t n,
                                 std::uint32_t k) {
  std::vector<Token> values(n);
  for (auto& v : values) v = static_cast<Token>(rng.between(1, k));
  return values;
}

struct QueryStats {
  std::uint64_t p50_ns = 0;
  std::uint64_t max_work = 0;
};

// Runs `count` queries produced by `next`, measuring per-query time and the
// instrumented work maximum.
QueryStats measure(std::uint64_t count,
                   const std::function<void(WorkCounters*)>& next) {
  QueryStats stats;
  std::vector<std::uint64_t> times;
  times.reserve(count);
  WorkCounters wc;
  for (std::uint64_t q = 0; q < count; ++q) {
    wc.reset();
    const auto start = Clock::now();
    next(&wc);
    times.push_back(ns_since(start));
    stats.max_work = std::max(stats.max_work, wc.total());
  }
  if (!times.empty()) {
    auto mid = times.begin() + times.size() / 2;
    std::nth_element(times.begin(), mid, times.end());
    stats.p50_ns = *mid;
  }
  return stats;
}

}  // namespace

std::string bench_csv_header() {
  return "structure,n,k,param,build_ns,p50_query_ns,max_cells_touched,seed";
}

std::string to_csv(const BenchRecord& r) {
  std::string line = r.structure;
  line += ',' + std::to_string(r.n);
  line += ',' + std::to_string(r.k);
  line += ',' + r.param;
  line += ',' + std::to_string(r.build_ns);
  line += ',' + std::to_string(r.p50_query_ns);
  line += ',' + std::to_string(r.max_cells_touched);
  line += ',' + std::to_string(r.seed);
  return line;
}

BenchRecord run_bench(const BenchConfig& config) {
  const bool is_grid =
      config.structure == "grid" || config.structure == "grid-counting";

  BenchRecord record;
  record.structure = config.structure;
  record.k = config.k;
  record.seed = config.seed;

  SeededRng rng(config.seed);

  if (is_grid) {
    std::vector<Index> dims = config.dims;
    if (dims.empty()) dims.push_back(static_cast<Index>(config.n));
    std::uint64_t n = 1;
    for (Index e : dims) n *= e;
    if (n == 0) throw UsageError("grid bench needs positive extents");
    record.n = n;

    const auto values = random_tokens(rng, n, config.k);
    const auto start = Clock::now();
    GridArray ga(values, dims);
    std::unique_ptr<FrequencyGrid> fg;
    if (config.structure == "grid") fg = std::make_unique<FrequencyGrid>(ga);
    record.build_ns = ns_since(start);
    record.param = "0";

    Workspace ws;
    auto stats = measure(config.query_count, [&](WorkCounters* wc) {
      GridRange r;
      r.lo.fill(1);
      r.hi.fill(1);
      for (int l = 0; l < ga.dim_count(); ++l) {
        auto a = static_cast<Index>(rng.between(1, ga.extent(l)));
        auto b = static_cast<Index>(rng.between(1, ga.extent(l)));
        r.lo[l] = std::min(a, b);
        r.hi[l] = std::max(a, b);
      }
      if (fg)
        fg->query(r, ws, wc);
      else
        counting_query(ga, ws, r, wc);
    });
    record.p50_query_ns = stats.p50_ns;
    record.max_cells_touched = stats.max_work;
    return record;
  }

  if (config.n == 0) throw UsageError("bench needs --n >= 1");
  record.n = config.n;
  const auto values = random_tokens(rng, config.n, config.k);
  const auto n = static_cast<Index>(config.n);

  const auto start = Clock::now();
  RankedArray ra(values);
  std::unique_ptr<OccurrenceIndex> oi;
  std::unique_ptr<SparseModeTable> smt;
  std::unique_ptr<SparseFrequencyTable> sft;
  std::unique_ptr<LowFrequencyStructure> lfs;

  if (config.structure == "sparse-mode") {
    oi = std::make_unique<OccurrenceIndex>(ra);
    smt = std::make_unique<SparseModeTable>(ra, *oi, config.epsilon);
    record.param = format_param(config.epsilon);
  } else if (config.structure == "sparse-freq") {
    sft = std::make_unique<SparseFrequencyTable>(ra, config.block);
    record.param = std::to_string(sft->block_size());
  } else if (config.structure == "low-freq") {
    oi = std::make_unique<OccurrenceIndex>(ra);
    lfs = std::make_unique<LowFrequencyStructure>(ra, *oi, config.block);
    record.param = std::to_string(lfs->block_size());
  } else if (config.structure == "counting") {
    record.param = "0";
  } else {
    throw UsageError("unknown structure: " + config.structure);
  }
  record.build_ns = ns_since(start);

  Workspace ws;
  auto stats = measure(config.query_count, [&](WorkCounters* wc) {
    const QueryRange r = rng.range(n);
    if (smt)
      smt->query(r, ws, wc);
    else if (sft)
      sft->query(r, ws, wc);
    else if (lfs)
      lfs->query(r, ws, wc);
    else
      counting_query(ra, ws, r, wc);
  });
  record.p50_query_ns = stats.p50_ns;
  record.max_cells_touched = stats.max_work;
  return record;
}

}  // namespace rangemode
