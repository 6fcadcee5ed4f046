#pragma once

#include <cstdint>
#include <vector>

#include "rangemode/occurrence_index.hpp"
#include "rangemode/ranked_array.hpp"
#include "rangemode/types.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

// Reach arrays per block boundary: F_p[x] is the largest j <= n such that
// the mode of B[p+1:j] has frequency at most x, with the mode that realizes
// the bracket stored alongside. A query successor-searches F_p for the span
// mode, then scans only the prefix B[i:p] with the occurrence-list gadget;
// everything right of the boundary is covered by the reach semantics, so no
// suffix pass exists. With s = m the F storage is at most 2n + 2m cells.
class LowFrequencyStructure {
 public:
  // block = 0 picks s = m (the global mode frequency). Throws
  // BadBlockSizeError unless 1 <= s <= n.
  LowFrequencyStructure(const RankedArray& ra, const OccurrenceIndex& oi,
                        std::uint32_t block = 0);

  std::uint32_t block_size() const { return s_; }
  std::uint32_t global_mode_frequency() const { return m_; }
  std::size_t boundary_count() const { return boundary_count_; }
  Index boundary(std::size_t idx) const {
    return static_cast<Index>(idx * s_);
  }

  // F_p[x] and its stored mode, addressed by boundary index p/s.
  Index reach(std::size_t boundary_idx, std::uint32_t x) const {
    return reach_[boundary_idx * m_ + x - 1];
  }
  Rank reach_mode(std::size_t boundary_idx, std::uint32_t x) const {
    return reach_modes_[boundary_idx * m_ + x - 1];
  }

  ModeAnswer query(QueryRange r, Workspace& ws,
                   WorkCounters* wc = nullptr) const;

  std::uint64_t f_cells() const { return reach_.size() + reach_modes_.size(); }

 private:
  const RankedArray* ra_;
  const OccurrenceIndex* oi_;
  std::uint32_t s_ = 1;
  std::uint32_t m_ = 1;
  std::size_t boundary_count_ = 0;
  std::vector<Index> reach_;       // F, boundary-major
  std::vector<Rank> reach_modes_;  // stored mode per F entry
};

}  // namespace rangemode
