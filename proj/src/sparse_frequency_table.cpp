#include "rangemode/sparse_frequency_table.hpp"

#include <cassert>
#include <cstring>

#include "rangemode/errors.hpp"

namespace rangemode {

SparseFrequencyTable::SparseFrequencyTable(const RankedArray& ra,
                                           std::uint32_t block)
    : ra_(&ra) {
  const Index n = ra.size();
  const Rank k = ra.distinct_count();
  s_ = block == 0 ? k : block;
  if (s_ < 1 || s_ > n) {
    throw BadBlockSizeError("block size must lie in [1, n], got " +
                            std::to_string(block) + " with n = " +
                            std::to_string(n));
  }

  boundaries_.push_back(0);
  for (Index p = s_; p <= n; p += s_) boundaries_.push_back(p);
  if (boundaries_.back() != n) boundaries_.push_back(n);

  cells_.assign(boundaries_.size() * static_cast<std::size_t>(k), 0);
  std::vector<std::uint32_t> running(k, 0);
  std::size_t emitted = 1;  // C_0 stays zero
  for (Index pos = 1; pos <= n; ++pos) {
    ++running[ra.rank_at(pos) - 1];
    while (emitted < boundaries_.size() && boundaries_[emitted] == pos) {
      std::memcpy(cells_.data() + emitted * k, running.data(),
                  k * sizeof(std::uint32_t));
      ++emitted;
    }
  }
}

ModeAnswer SparseFrequencyTable::query(QueryRange r, Workspace& ws,
                                       WorkCounters* wc) const {
  assert(ra_->valid(r));
  const Rank k = ra_->distinct_count();
  const Index i = r.lo, j = r.hi;
  const Index p = s_ * ((i - 1) / s_);
  const Index pp = s_ * (j / s_);

  ws.ensure(k);
  std::uint32_t* table = ws.data();
  const std::uint32_t* low = cells_.data() + (p / s_) * std::size_t{k};
  const std::uint32_t* high = cells_.data() + (pp / s_) * std::size_t{k};

  // Span table by snapshot subtraction; boundary fix-ups may drive entries
  // transiently negative, which unsigned wrap-around carries correctly.
  for (Rank a = 0; a < k; ++a) {
    touch_cells(wc);
    table[a] = high[a] - low[a];
  }
  for (Index x = p + 1; x < i; ++x) {
    touch_cells(wc);
    --table[ra_->rank_at(x) - 1];
  }
  for (Index x = pp + 1; x <= j; ++x) {
    touch_cells(wc);
    ++table[ra_->rank_at(x) - 1];
  }

  // Max scan fused with the reset, leaving the workspace all-zero.
  Rank best_rank = 1;
  std::uint32_t best_f = 0;
  for (Rank a = 0; a < k; ++a) {
    touch_cells(wc);
    assert(static_cast<std::int32_t>(table[a]) >= 0);
    if (table[a] > best_f) {
      best_f = table[a];
      best_rank = a + 1;
    }
    table[a] = 0;
  }

  Index witness = 0;
  for (Index x = i; x <= j; ++x) {
    if (ra_->rank_at(x) == best_rank) {
      witness = x;
      break;
    }
  }
  return ModeAnswer{ra_->token_for(best_rank), best_f, witness};
}

}  // namespace rangemode
