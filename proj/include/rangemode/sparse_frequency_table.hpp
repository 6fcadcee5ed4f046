#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rangemode/ranked_array.hpp"
#include "rangemode/types.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

// Prefix frequency snapshots every s positions: C_p[x] = multiplicity of
// rank x in B[1:p]. A query subtracts two snapshots and adjusts for the
// partial blocks at both ends, giving O(k+s) work. With s = k the snapshot
// storage stays linear.
//
// Snapshots sit at p = 0, s, 2s, ... plus a final one at p = n when s does
// not divide n, so there are always ceil(n/s)+1 of them; the clipped final
// snapshot keeps the per-snapshot invariant sum(C_p) = p while queries only
// ever address the full multiples.
class SparseFrequencyTable {
 public:
  // block = 0 picks s = k. Throws BadBlockSizeError unless 1 <= s <= n.
  explicit SparseFrequencyTable(const RankedArray& ra, std::uint32_t block = 0);

  std::uint32_t block_size() const { return s_; }
  std::size_t snapshot_count() const { return boundaries_.size(); }
  Index boundary(std::size_t idx) const { return boundaries_[idx]; }
  std::span<const std::uint32_t> snapshot(std::size_t idx) const {
    const Rank k = ra_->distinct_count();
    return {cells_.data() + idx * k, k};
  }

  ModeAnswer query(QueryRange r, Workspace& ws,
                   WorkCounters* wc = nullptr) const;

  std::uint64_t snapshot_cells() const { return cells_.size(); }

 private:
  const RankedArray* ra_;
  std::uint32_t s_ = 0;
  std::vector<Index> boundaries_;      // 0, s, 2s, ..., (n)
  std::vector<std::uint32_t> cells_;   // snapshot_count x k, row-major
};

}  // namespace rangemode
