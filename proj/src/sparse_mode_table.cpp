#include "rangemode/sparse_mode_table.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "rangemode/errors.hpp"

namespace rangemode {

namespace {

// ceil(n^eps) with a snap against floating error on exact powers.
Index block_size_for(Index n, double eps) {
  double p = std::pow(static_cast<double>(n), eps);
  double r = std::round(p);
  if (std::abs(p - r) < 1e-9) p = r;
  return static_cast<Index>(std::ceil(p));
}

}  // namespace

SparseModeTable::SparseModeTable(const RankedArray& ra,
                                 const OccurrenceIndex& oi, double epsilon)
    : ra_(&ra), oi_(&oi), epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) throw BadEpsilonError(epsilon);

  const Index n = ra.size();
  const Rank k = ra.distinct_count();
  s_ = block_size_for(n, epsilon);
  t_ = (n + s_ - 1) / s_;

  modes_.assign(static_cast<std::size_t>(t_) * t_, 0);
  freqs_.assign(static_cast<std::size_t>(t_) * t_, 0);

  // One scan per row bi, recording a running best at every block boundary.
  // The last block may be short; its entries cover its true extent.
  std::vector<std::uint32_t> tally(k, 0);
  for (Index bi = 0; bi < t_; ++bi) {
    const Index row_lo = bi * s_ + 1;
    Rank best_rank = 0;
    std::uint32_t best_f = 0;
    Index bj = bi;
    for (Index pos = row_lo; pos <= n; ++pos) {
      Rank a = ra.rank_at(pos);
      std::uint32_t f = ++tally[a - 1];
      if (f > best_f) {
        best_f = f;
        best_rank = a;
      }
      if (pos == n || pos == (bj + 1) * s_) {
        modes_[bi * t_ + bj] = best_rank;
        freqs_[bi * t_ + bj] = best_f;
        ++bj;
      }
    }
    if (k <= n - row_lo + 1) {
      std::fill(tally.begin(), tally.end(), 0);
    } else {
      for (Index pos = row_lo; pos <= n; ++pos) tally[ra.rank_at(pos) - 1] = 0;
    }
  }
}

Decomposition SparseModeTable::decompose(QueryRange r) const {
  assert(ra_->valid(r));
  const std::int64_t s = s_;
  const std::int64_t i = r.lo, j = r.hi;

  Decomposition d;
  d.first_block = (i - 1 + s - 1) / s;    // ceil((i-1)/s)
  d.last_block = j / s - 1;               // floor(j/s) - 1

  d.prefix_lo = r.lo;
  d.prefix_hi = static_cast<Index>(std::min<std::int64_t>(d.first_block * s, j));
  d.span_lo = static_cast<Index>(d.first_block * s + 1);
  d.span_hi = static_cast<Index>(std::max<std::int64_t>((d.last_block + 1) * s, 0));
  // Clamp past the prefix so the three pieces stay disjoint when the raw
  // bounds overlap (possible only for empty spans).
  d.suffix_lo = static_cast<Index>(
      std::max<std::int64_t>((d.last_block + 1) * s + 1, d.prefix_hi + 1));
  d.suffix_hi = r.hi;
  return d;
}

ModeAnswer SparseModeTable::query(QueryRange r, Workspace& ws,
                                  WorkCounters* wc) const {
  const Decomposition d = decompose(r);
  const Rank k = ra_->distinct_count();
  ws.ensure(k);
  std::uint32_t* scratch = ws.data();

  Rank best_rank = 0;
  std::uint32_t best_f = 0;
  Index witness = 0;
  bool witness_in_span = false;
  if (!d.span_empty()) {
    best_rank = modes_[static_cast<std::size_t>(d.first_block) * t_ +
                       static_cast<std::size_t>(d.last_block)];
    best_f = freqs_[static_cast<std::size_t>(d.first_block) * t_ +
                    static_cast<std::size_t>(d.last_block)];
    witness_in_span = true;
  }

  bool any_counted = false;

  // Prefix left to right. A position whose element was already counted is
  // skipped; a first occurrence is candidate-tested against the running
  // best, then counted exactly from that threshold on.
  for (Index x = d.prefix_lo; x <= d.prefix_hi; ++x) {
    touch_cells(wc);
    Rank a = ra_->rank_at(x);
    if (scratch[a - 1] != 0) continue;
    if (oi_->freq_at_least(x, r.hi, best_f + 1, wc)) {
      std::uint32_t f = oi_->count_from(x, r.hi, best_f + 1, wc);
      scratch[a - 1] = f;
      any_counted = true;
      best_f = f;
      best_rank = a;
      witness = x;
      witness_in_span = false;
    }
  }

  // Suffix right to left, mirrored: the first visit of an element is its
  // rightmost occurrence in the range, so counting runs leftward from it.
  for (std::int64_t x = d.suffix_hi; x >= d.suffix_lo; --x) {
    touch_cells(wc);
    Index pos = static_cast<Index>(x);
    Rank a = ra_->rank_at(pos);
    if (scratch[a - 1] != 0) continue;
    if (oi_->freq_at_least_rev(pos, r.lo, best_f + 1, wc)) {
      std::uint32_t f = oi_->count_from_rev(pos, r.lo, best_f + 1, wc);
      scratch[a - 1] = f;
      any_counted = true;
      best_f = f;
      best_rank = a;
      witness = pos;
      witness_in_span = false;
    }
  }

  // Reset by re-scanning the partial blocks; only touched entries exist
  // there. Nothing to do if no candidate was counted.
  if (any_counted) {
    for (Index x = d.prefix_lo; x <= d.prefix_hi; ++x) {
      touch_cells(wc);
      scratch[ra_->rank_at(x) - 1] = 0;
    }
    for (Index x = d.suffix_lo; x <= d.suffix_hi; ++x) {
      touch_cells(wc);
      scratch[ra_->rank_at(x) - 1] = 0;
    }
  }

  if (witness_in_span) {
    witness = oi_->first_occurrence_at_or_after(best_rank, d.span_lo, wc);
    assert(witness != 0 && witness <= d.span_hi);
  }
  return ModeAnswer{ra_->token_for(best_rank), best_f, witness};
}

}  // namespace rangemode
