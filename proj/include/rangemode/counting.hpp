#pragma once

#include <cassert>

#include "rangemode/ranked_array.hpp"
#include "rangemode/types.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

// Zero-preprocessing range mode: tally B[lo:hi] into the caller's size-k
// workspace, then a second pass over the same positions reads each rank's
// total once and zeroes it, so the workspace leaves all-zero. O(hi-lo+1).
inline ModeAnswer counting_query(const RankedArray& ra, Workspace& ws,
                                 QueryRange r, WorkCounters* wc = nullptr) {
  assert(ra.valid(r));
  ws.ensure(ra.distinct_count());
  std::uint32_t* tally = ws.data();

  for (Index x = r.lo; x <= r.hi; ++x) {
    touch_cells(wc);
    ++tally[ra.rank_at(x) - 1];
  }

  Rank best_rank = 0;
  std::uint32_t best_f = 0;
  Index witness = 0;
  for (Index x = r.lo; x <= r.hi; ++x) {
    touch_cells(wc);
    Rank a = ra.rank_at(x);
    std::uint32_t f = tally[a - 1];
    tally[a - 1] = 0;  // second visit of a rank reads 0 and is skipped
    if (f > best_f) {
      best_f = f;
      best_rank = a;
      witness = x;
    }
  }
  return ModeAnswer{ra.token_for(best_rank), best_f, witness};
}

}  // namespace rangemode
