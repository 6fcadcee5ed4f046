#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rangemode/types.hpp"

namespace rangemode {

// Seeded synthetic benchmark: n tokens uniform over {1..k}, uniformly random
// valid ranges. Structure names match the CLI: sparse-mode, sparse-freq,
// low-freq, counting, grid, grid-counting. Grid structures take `dims`
// (extent product replaces n); with dims empty they run on a 1-D grid.
struct BenchConfig {
  std::string structure;
  std::uint64_t n = 0;
  std::uint32_t k = 1;
  double epsilon = 0.5;     // sparse-mode only
  std::uint32_t block = 0;  // sparse-freq / low-freq; 0 = auto
  std::uint64_t query_count = 0;
  std::uint64_t seed = 0;
  std::vector<Index> dims;
};

// All columns except the *_ns timings are deterministic for a fixed seed.
// max_cells_touched is the per-query maximum of cells_touched + occ_probes
// + successor_probes.
struct BenchRecord {
  std::string structure;
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::string param;
  std::uint64_t build_ns = 0;
  std::uint64_t p50_query_ns = 0;
  std::uint64_t max_cells_touched = 0;
  std::uint64_t seed = 0;
};

std::string bench_csv_header();
std::string to_csv(const BenchRecord& record);

// Throws UsageError for unknown structure names or inconsistent parameters.
BenchRecord run_bench(const BenchConfig& config);

}  // namespace rangemode
