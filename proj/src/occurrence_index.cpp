#include "rangemode/occurrence_index.hpp"

#include <algorithm>

namespace rangemode {

OccurrenceIndex::OccurrenceIndex(const RankedArray& ra) : ra_(&ra) {
  const Index n = ra.size();
  const Rank k = ra.distinct_count();

  // starts_[a-1] .. starts_[a] brackets Q_a inside flat_.
  starts_.assign(k + 1, 0);
  for (Index pos = 1; pos <= n; ++pos) ++starts_[ra.rank_at(pos)];
  for (Rank a = 1; a <= k; ++a) starts_[a] += starts_[a - 1];

  // Single pass: positions arrive in ascending order, so each Q_a fills
  // in sorted order and B' falls out as the running fill level.
  flat_.resize(n);
  within_.resize(n);
  std::vector<std::uint32_t> fill(starts_.begin(), starts_.end() - 1);
  for (Index pos = 1; pos <= n; ++pos) {
    Rank a = ra.rank_at(pos);
    std::uint32_t slot = fill[a - 1]++;
    flat_[slot] = pos;
    within_[pos - 1] = slot - starts_[a - 1] + 1;
  }
}

Index OccurrenceIndex::first_occurrence_at_or_after(Rank a, Index pos,
                                                    WorkCounters* wc) const {
  auto qa = occurrences(a);
  std::size_t lo = 0, hi = qa.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    touch_occ(wc);
    if (qa[mid] < pos)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < qa.size() ? qa[lo] : 0;
}

std::uint32_t OccurrenceIndex::occurrences_in(Rank a, Index lo,
                                              Index hi) const {
  auto qa = occurrences(a);
  auto first = std::lower_bound(qa.begin(), qa.end(), lo);
  auto last = std::upper_bound(qa.begin(), qa.end(), hi);
  return static_cast<std::uint32_t>(last - first);
}

}  // namespace rangemode
