#pragma once

#include <cstdint>

namespace rangemode {

// Deterministic work proxies, reset between queries.
//
// cells_touched counts cell-visit loop iterations: one per array position or
// table slot a scan examines (fused reads of parallel tables inside a single
// iteration count once). occ_probes counts occurrence-list element reads.
// successor_probes counts reach-table reads during successor search.
// Witness recovery (locating an index that holds an already-computed mode)
// is not instrumented; see README.
struct WorkCounters {
  std::uint64_t cells_touched = 0;
  std::uint64_t occ_probes = 0;
  std::uint64_t successor_probes = 0;

  void reset() { *this = WorkCounters{}; }
  std::uint64_t total() const {
    return cells_touched + occ_probes + successor_probes;
  }
};

inline void touch_cells(WorkCounters* wc, std::uint64_t v = 1) {
  if (wc) wc->cells_touched += v;
}
inline void touch_occ(WorkCounters* wc, std::uint64_t v = 1) {
  if (wc) wc->occ_probes += v;
}
inline void touch_succ(WorkCounters* wc, std::uint64_t v = 1) {
  if (wc) wc->successor_probes += v;
}

}  // namespace rangemode
