#include "rangemode/ranked_array.hpp"

#include <algorithm>
#include <cassert>

#include "rangemode/errors.hpp"

namespace rangemode {

RankedArray::RankedArray(std::span<const Token> values) {
  if (values.empty()) throw EmptyArrayError{};
  values_.assign(values.begin(), values.end());

  distinct_ = values_;
  std::sort(distinct_.begin(), distinct_.end());
  distinct_.erase(std::unique(distinct_.begin(), distinct_.end()),
                  distinct_.end());

  ranks_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    auto it = std::lower_bound(distinct_.begin(), distinct_.end(), values_[i]);
    ranks_[i] = static_cast<Rank>(it - distinct_.begin()) + 1;
  }
}

ModeAnswer oracle_mode(const RankedArray& ra, QueryRange r) {
  Workspace ws;
  return oracle_mode(ra, r, ws);
}

ModeAnswer oracle_mode(const RankedArray& ra, QueryRange r, Workspace& ws) {
  assert(ra.valid(r));
  ws.ensure(ra.distinct_count());
  std::uint32_t* tally = ws.data();

  for (Index x = r.lo; x <= r.hi; ++x) ++tally[ra.rank_at(x) - 1];

  // Smallest rank wins ties; D is sorted, so that is the smallest token.
  Rank best_rank = 0;
  std::uint32_t best_f = 0;
  for (Index x = r.lo; x <= r.hi; ++x) {
    Rank a = ra.rank_at(x);
    std::uint32_t f = tally[a - 1];
    if (f > best_f || (f == best_f && a < best_rank)) {
      best_f = f;
      best_rank = a;
    }
  }

  Index witness = 0;
  for (Index x = r.lo; x <= r.hi; ++x) {
    if (ra.rank_at(x) == best_rank) {
      witness = x;
      break;
    }
  }
  for (Index x = r.lo; x <= r.hi; ++x) tally[ra.rank_at(x) - 1] = 0;

  return ModeAnswer{ra.token_for(best_rank), best_f, witness};
}

}  // namespace rangemode
