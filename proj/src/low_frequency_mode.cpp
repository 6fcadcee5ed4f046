#include "rangemode/low_frequency_mode.hpp"

#include <algorithm>
#include <cassert>

#include "rangemode/errors.hpp"

namespace rangemode {

LowFrequencyStructure::LowFrequencyStructure(const RankedArray& ra,
                                             const OccurrenceIndex& oi,
                                             std::uint32_t block)
    : ra_(&ra), oi_(&oi) {
  const Index n = ra.size();
  const Rank k = ra.distinct_count();

  std::vector<std::uint32_t> tally(k, 0);
  m_ = 0;
  for (Index pos = 1; pos <= n; ++pos) m_ = std::max(m_, ++tally[ra.rank_at(pos) - 1]);
  std::fill(tally.begin(), tally.end(), 0);

  s_ = block == 0 ? m_ : block;
  if (s_ < 1 || s_ > n) {
    throw BadBlockSizeError("block size must lie in [1, n], got " +
                            std::to_string(block) + " with n = " +
                            std::to_string(n));
  }

  boundary_count_ = static_cast<std::size_t>(n / s_) + 1;
  reach_.assign(boundary_count_ * m_, n);
  reach_modes_.assign(boundary_count_ * m_, 0);

  // Sweep right from each boundary. The running best frequency climbs one
  // step at a time; the moment it leaves x the bracket for x closes at the
  // previous position, carrying the first element that reached count x.
  for (std::size_t qi = 0; qi < boundary_count_; ++qi) {
    const Index p = static_cast<Index>(qi * s_);
    Rank best_rank = 0;
    std::uint32_t best_f = 0;
    for (Index pos = p + 1; pos <= n; ++pos) {
      Rank a = ra.rank_at(pos);
      std::uint32_t f = ++tally[a - 1];
      if (f > best_f) {
        if (best_f >= 1) {
          reach_[qi * m_ + best_f - 1] = pos - 1;
          reach_modes_[qi * m_ + best_f - 1] = best_rank;
        }
        best_f = f;
        best_rank = a;
      }
    }
    for (std::uint32_t x = std::max(best_f, 1u); x <= m_; ++x) {
      reach_modes_[qi * m_ + x - 1] = best_rank;  // trailing entries reach n
    }
    if (k <= n - p) {
      std::fill(tally.begin(), tally.end(), 0);
    } else {
      for (Index pos = p + 1; pos <= n; ++pos) tally[ra.rank_at(pos) - 1] = 0;
    }
  }
}

ModeAnswer LowFrequencyStructure::query(QueryRange r, Workspace& ws,
                                        WorkCounters* wc) const {
  assert(ra_->valid(r));
  const Index i = r.lo, j = r.hi;
  const Index p = s_ * ((i - 1 + s_ - 1) / s_);  // first boundary >= i-1

  ws.ensure(ra_->distinct_count());
  std::uint32_t* scratch = ws.data();

  if (p >= j) {
    // No boundary inside the range: direct tally of at most s-1 items.
    Rank best_rank = 0;
    std::uint32_t best_f = 0;
    Index witness = 0;
    for (Index x = i; x <= j; ++x) {
      touch_cells(wc);
      ++scratch[ra_->rank_at(x) - 1];
    }
    for (Index x = i; x <= j; ++x) {
      touch_cells(wc);
      Rank a = ra_->rank_at(x);
      std::uint32_t f = scratch[a - 1];
      scratch[a - 1] = 0;
      if (f > best_f) {
        best_f = f;
        best_rank = a;
        witness = x;
      }
    }
    return ModeAnswer{ra_->token_for(best_rank), best_f, witness};
  }

  // Span B[p+1:j]: its mode frequency is the least x whose reach covers j.
  const std::size_t qi = p / s_;
  const Index* row = reach_.data() + qi * m_;
  std::uint32_t lo = 1, hi = m_;
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    touch_succ(wc);
    if (row[mid - 1] >= j)
      hi = mid;
    else
      lo = mid + 1;
  }
  Rank best_rank = reach_modes_[qi * m_ + lo - 1];
  std::uint32_t best_f = lo;
  Index witness = 0;
  bool witness_in_span = true;

  // Prefix B[i:p], handled exactly like the sparse-mode-table prefix.
  bool any_counted = false;
  for (Index x = i; x <= p; ++x) {
    touch_cells(wc);
    Rank a = ra_->rank_at(x);
    if (scratch[a - 1] != 0) continue;
    if (oi_->freq_at_least(x, j, best_f + 1, wc)) {
      std::uint32_t f = oi_->count_from(x, j, best_f + 1, wc);
      scratch[a - 1] = f;
      any_counted = true;
      best_f = f;
      best_rank = a;
      witness = x;
      witness_in_span = false;
    }
  }
  if (any_counted) {
    for (Index x = i; x <= p; ++x) {
      touch_cells(wc);
      scratch[ra_->rank_at(x) - 1] = 0;
    }
  }

  if (witness_in_span) {
    witness = oi_->first_occurrence_at_or_after(best_rank, p + 1, wc);
    assert(witness != 0 && witness <= j);
  }
  return ModeAnswer{ra_->token_for(best_rank), best_f, witness};
}

}  // namespace rangemode
