#pragma once

#include <span>
#include <vector>

#include "rangemode/types.hpp"

namespace rangemode {

// Rank-reduced input array. Keeps the source tokens A[1:n], the sorted
// distinct tokens D[1:k], and the rank array B[1:n] with D[B[i]] = A[i].
// All positions and ranks are 1-based; storage is 0-based internally.
class RankedArray {
 public:
  // Throws EmptyArrayError on empty input. O(n log k).
  explicit RankedArray(std::span<const Token> values);

  Index size() const { return static_cast<Index>(values_.size()); }
  Rank distinct_count() const { return static_cast<Rank>(distinct_.size()); }

  Token value_at(Index pos) const { return values_[pos - 1]; }
  Rank rank_at(Index pos) const { return ranks_[pos - 1]; }
  Token token_for(Rank r) const { return distinct_[r - 1]; }

  std::span<const Token> values() const { return values_; }
  std::span<const Rank> ranks() const { return ranks_; }
  std::span<const Token> distinct() const { return distinct_; }

  bool valid(QueryRange r) const {
    return r.lo >= 1 && r.lo <= r.hi && r.hi <= size();
  }

 private:
  std::vector<Token> values_;
  std::vector<Rank> ranks_;
  std::vector<Token> distinct_;
};

// Reference answer by full scan with a size-k tally. Among tied modes
// returns the smallest source token and its first witness position;
// this is the deterministic baseline every structure is compared against.
ModeAnswer oracle_mode(const RankedArray& ra, QueryRange r);
ModeAnswer oracle_mode(const RankedArray& ra, QueryRange r, Workspace& ws);

}  // namespace rangemode
