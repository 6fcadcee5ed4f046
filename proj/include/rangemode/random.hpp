#pragma once

#include <cstdint>
#include <random>

#include "rangemode/types.hpp"

namespace rangemode {

// Seeded generator with a rejection-sampled bounded draw, so streams are
// reproducible independent of the standard library's distribution choices.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform over [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform over the inclusive range [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  QueryRange range(Index n) {
    auto a = static_cast<Index>(between(1, n));
    auto b = static_cast<Index>(between(1, n));
    return a <= b ? QueryRange{a, b} : QueryRange{b, a};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rangemode
