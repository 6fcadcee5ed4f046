#pragma once

#include <cstdint>
#include <vector>

#include "rangemode/occurrence_index.hpp"
#include "rangemode/ranked_array.hpp"
#include "rangemode/types.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

// Split of a query range over blocks of size s: the span is the maximal run
// of fully contained blocks, the prefix/suffix are the partial remainders.
// Ranges are empty when lo > hi. The three pieces partition [lo, hi].
struct Decomposition {
  std::int64_t first_block = 0;  // b_i
  std::int64_t last_block = 0;   // b_j; span empty iff b_i > b_j
  Index prefix_lo = 1, prefix_hi = 0;
  Index span_lo = 1, span_hi = 0;
  Index suffix_lo = 1, suffix_hi = 0;

  bool span_empty() const { return first_block > last_block; }
};

// Precomputed span modes over a sqrt-style block decomposition: block size
// s = ceil(n^eps), t = ceil(n/s) blocks, and t x t tables holding a mode
// (and its frequency) of every block-aligned span. A query takes the span
// answer from the tables and scans only the prefix and suffix, testing each
// first-seen element against the running best with the constant-time
// occurrence-list gadget. O(n^(2-2eps)) table space, O(n^eps) query work.
class SparseModeTable {
 public:
  // Throws BadEpsilonError outside [0, 1/2]. Build is O(t*n): one
  // left-to-right tally scan per table row.
  SparseModeTable(const RankedArray& ra, const OccurrenceIndex& oi,
                  double epsilon);

  Index block_size() const { return s_; }
  Index block_count() const { return t_; }
  double epsilon() const { return epsilon_; }

  Decomposition decompose(QueryRange r) const;

  ModeAnswer query(QueryRange r, Workspace& ws,
                   WorkCounters* wc = nullptr) const;

  // S[bi][bj] / S'[bi][bj]; valid for bi <= bj.
  Rank span_mode(std::size_t bi, std::size_t bj) const {
    return modes_[bi * t_ + bj];
  }
  std::uint32_t span_mode_freq(std::size_t bi, std::size_t bj) const {
    return freqs_[bi * t_ + bj];
  }

  std::uint64_t table_cells() const { return modes_.size() + freqs_.size(); }
  // Tables plus the occurrence-index cells the structure queries through.
  std::uint64_t auxiliary_cells() const {
    return table_cells() + oi_->cell_count();
  }

  // Fault-injection hook for verification tests.
  void corrupt_span_freq_for_testing(std::size_t bi, std::size_t bj,
                                     std::uint32_t value) {
    freqs_[bi * t_ + bj] = value;
  }

 private:
  const RankedArray* ra_;
  const OccurrenceIndex* oi_;
  double epsilon_ = 0.0;
  Index s_ = 1;  // block size
  Index t_ = 1;  // block count
  std::vector<Rank> modes_;           // S, t x t row-major
  std::vector<std::uint32_t> freqs_;  // S'
};

}  // namespace rangemode
