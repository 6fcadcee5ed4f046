#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "rangemode/ranked_array.hpp"
#include "rangemode/types.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

// Per-element occurrence lists Q_1..Q_k (ascending 1-based positions, stored
// flat) plus the in-list rank array B'[1:n] with Q_{B[b]}[B'[b]] = b.
// Together they answer "does B[start:j] hold at least q copies of B[start]?"
// in constant time. Borrows the RankedArray, which must outlive this index.
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const RankedArray& ra);

  std::span<const Index> occurrences(Rank a) const {
    return {flat_.data() + starts_[a - 1], starts_[a] - starts_[a - 1]};
  }
  // B'[pos]: 1-based position of pos within Q_{B[pos]}.
  std::uint32_t rank_within(Index pos) const { return within_[pos - 1]; }

  // True iff B[start] occurs at least q times in B[start:j]. Constant time:
  // probes Q_{B[start]}[B'[start]+q-1] <= j, negative if the index runs off
  // the end of the list.
  bool freq_at_least(Index start, Index j, std::uint32_t q,
                     WorkCounters* wc = nullptr) const {
    assert(start >= 1 && start <= j && q >= 1);
    touch_cells(wc, 2);  // B[start], B'[start]
    Rank a = ra_->rank_at(start);
    std::uint64_t idx = static_cast<std::uint64_t>(within_[start - 1]) + q - 1;
    auto qa = occurrences(a);
    if (idx > qa.size()) return false;
    touch_occ(wc);
    return qa[idx - 1] <= j;
  }

  // Exact multiplicity of B[start] in B[start:j], scanning Q_{B[start]}
  // upward from the lower_bound-th occurrence. Requires
  // freq_at_least(start, j, lower_bound). Cost O(f - lower_bound + 1).
  std::uint32_t count_from(Index start, Index j, std::uint32_t lower_bound,
                           WorkCounters* wc = nullptr) const {
    touch_cells(wc, 2);
    Rank a = ra_->rank_at(start);
    std::uint32_t base = within_[start - 1];
    auto qa = occurrences(a);
    std::uint64_t y = static_cast<std::uint64_t>(base) + lower_bound - 1;
    assert(y >= 1 && y <= qa.size() && qa[y - 1] <= j);
    while (y < qa.size()) {
      touch_occ(wc);
      if (qa[y] > j) break;
      ++y;
    }
    return static_cast<std::uint32_t>(y - base + 1);
  }

  // Mirrored gadget: at least q copies of B[end] in B[i:end]?
  bool freq_at_least_rev(Index end, Index i, std::uint32_t q,
                         WorkCounters* wc = nullptr) const {
    assert(i >= 1 && i <= end && q >= 1);
    touch_cells(wc, 2);
    Rank a = ra_->rank_at(end);
    std::uint32_t pos = within_[end - 1];
    if (pos < q) return false;
    touch_occ(wc);
    return occurrences(a)[pos - q] >= i;
  }

  // Exact multiplicity of B[end] in B[i:end]; mirror of count_from.
  std::uint32_t count_from_rev(Index end, Index i, std::uint32_t lower_bound,
                               WorkCounters* wc = nullptr) const {
    touch_cells(wc, 2);
    Rank a = ra_->rank_at(end);
    std::uint32_t pos = within_[end - 1];
    auto qa = occurrences(a);
    std::uint64_t y = static_cast<std::uint64_t>(pos) - lower_bound + 1;
    assert(y >= 1 && qa[y - 1] >= i);
    while (y > 1) {
      touch_occ(wc);
      if (qa[y - 2] < i) break;
      --y;
    }
    return static_cast<std::uint32_t>(pos - y + 1);
  }

  // First occurrence of rank a at or after pos, or 0 if none.
  Index first_occurrence_at_or_after(Rank a, Index pos,
                                     WorkCounters* wc = nullptr) const;

  // Multiplicity of rank a inside [lo, hi] by two binary searches.
  std::uint32_t occurrences_in(Rank a, Index lo, Index hi) const;

  std::uint64_t cell_count() const {
    return flat_.size() + within_.size() + starts_.size();
  }

 private:
  const RankedArray* ra_;
  std::vector<Index> flat_;            // Q_1..Q_k concatenated
  std::vector<std::uint32_t> starts_;  // k+1 offsets into flat_
  std::vector<std::uint32_t> within_;  // B'
};

}  // namespace rangemode
