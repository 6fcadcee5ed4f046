#pragma once

#include <span>
#include <string>
#include <vector>

#include "rangemode/grid.hpp"
#include "rangemode/low_frequency_mode.hpp"
#include "rangemode/occurrence_index.hpp"
#include "rangemode/ranked_array.hpp"
#include "rangemode/sparse_frequency_table.hpp"
#include "rangemode/sparse_mode_table.hpp"
#include "rangemode/types.hpp"

namespace rangemode {

struct VerifyReport {
  bool pass = true;
  std::uint64_t ranges_checked = 0;
  std::string counterexample;  // first mismatch, empty when pass
};

// Runs every 1-D structure against the oracle on each range: frequencies
// must match and each witness must lie in range, hold the reported element,
// and the element's multiplicity must equal the reported frequency.
VerifyReport verify_flat(const RankedArray& ra, const OccurrenceIndex& oi,
                         const SparseModeTable& smt,
                         const SparseFrequencyTable& sft,
                         const LowFrequencyStructure& lfs,
                         std::span<const QueryRange> ranges);

// Grid structures cross-checked against the counting method.
VerifyReport verify_grid(const GridArray& ga, const FrequencyGrid& fg,
                         std::span<const GridRange> ranges);

std::vector<QueryRange> all_ranges(Index n);
std::uint64_t count_grid_ranges(const GridArray& ga);
std::vector<GridRange> all_grid_ranges(const GridArray& ga);

}  // namespace rangemode
