#pragma once

#include <cstdint>
#include <vector>

namespace rangemode {

using Token = std::int64_t;
using Index = std::uint32_t;  // 1-based position into an array of n items
using Rank = std::uint32_t;   // 1-based rank into the distinct-token table

// Inclusive 1-based range [lo, hi]; valid iff 1 <= lo <= hi <= n.
struct QueryRange {
  Index lo = 1;
  Index hi = 1;

  Index length() const { return hi - lo + 1; }
};

// A mode of the queried range: `element` attains the (unique) maximum
// multiplicity `frequency`; `witness` is some position inside the range
// holding `element`. For grids the witness is a 1-based row-major index.
struct ModeAnswer {
  Token element = 0;
  std::uint32_t frequency = 0;
  std::uint64_t witness = 0;
};

// Scratch frequency tally over ranks. Zero-initialized once and kept
// all-zero between queries; each query restores the entries it touched.
// One workspace per concurrent caller.
class Workspace {
 public:
  void ensure(std::size_t k) {
    if (tally_.size() < k) tally_.resize(k, 0);
  }
  std::uint32_t* data() { return tally_.data(); }
  std::size_t size() const { return tally_.size(); }
  const std::vector<std::uint32_t>& raw() const { return tally_; }

 private:
  std::vector<std::uint32_t> tally_;
};

}  // namespace rangemode
