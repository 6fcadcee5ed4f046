#include <cmath>
#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "rangemode/errors.hpp"
#include "rangemode/sparse_mode_table.hpp"

using namespace rangemode;

namespace {

// 24 items over 5 distinct tokens; blocks of 4 at epsilon = 3/8. The span
// of (7,19) covers blocks 2..3 with mode 20 at frequency 4, and the suffix
// lifts the range mode to 20 with frequency 5.
const std::vector<Token> kWorked24{
    10, 20, 30, 40, 50, 10,              // block 0..1 head
    10, 50,                              // prefix of (7,19)
    20, 20, 20, 20, 30, 40, 50, 10,      // span blocks 2..3
    20, 30, 40,                          // suffix
    50, 40, 30, 20, 10};                 // tail

std::uint32_t brute_span_freq(const std::vector<Token>& values, Index lo,
                              Index hi) {
  return testref::mode_frequency(values, lo, hi);
}

}  // namespace

TEST_CASE("block geometry from epsilon") {
  RankedArray ra(kWorked24);
  OccurrenceIndex oi(ra);
  SparseModeTable smt(ra, oi, 3.0 / 8.0);
  CHECK(smt.block_size() == 4);
  CHECK(smt.block_count() == 6);

  RankedArray one(std::vector<Token>{42});
  OccurrenceIndex oi_one(one);
  SparseModeTable smt_one(one, oi_one, 0.25);
  CHECK(smt_one.block_size() == 1);
  CHECK(smt_one.block_count() == 1);
  CHECK(smt_one.span_mode_freq(0, 0) == 1);

  RankedArray small(std::vector<Token>{1, 2, 2, 1});
  OccurrenceIndex oi_small(small);
  SparseModeTable smt_small(small, oi_small, 0.5);
  CHECK(smt_small.block_size() == 2);
  CHECK(smt_small.span_mode_freq(0, 1) == 2);

  CHECK_THROWS_AS(SparseModeTable(ra, oi, -0.01), BadEpsilonError);
  CHECK_THROWS_AS(SparseModeTable(ra, oi, 0.51), BadEpsilonError);
}

TEST_CASE("decomposition formulas") {
  RankedArray ra(kWorked24);
  OccurrenceIndex oi(ra);
  SparseModeTable smt(ra, oi, 3.0 / 8.0);
  REQUIRE(smt.block_size() == 4);

  Decomposition d = smt.decompose({7, 19});
  CHECK(d.first_block == 2);
  CHECK(d.last_block == 3);
  CHECK(d.prefix_lo == 7);
  CHECK(d.prefix_hi == 8);
  CHECK(d.span_lo == 9);
  CHECK(d.span_hi == 16);
  CHECK(d.suffix_lo == 17);
  CHECK(d.suffix_hi == 19);

  // aligned query: empty prefix and suffix
  d = smt.decompose({1, 24});
  CHECK(d.prefix_lo > d.prefix_hi);
  CHECK(d.span_lo == 1);
  CHECK(d.span_hi == 24);
  CHECK(d.suffix_lo > d.suffix_hi);

  // single position strictly inside a block: empty span
  d = smt.decompose({5, 5});
  CHECK(d.first_block == 1);
  CHECK(d.last_block == 0);
  CHECK(d.span_empty());
}

TEST_CASE("decomposition partitions every range exactly") {
  SeededRng rng(307);
  for (std::size_t n : {1, 2, 7, 24, 60}) {
    auto values = testref::random_tokens(rng, n, 4);
    RankedArray ra(values);
    OccurrenceIndex oi(ra);
    for (double eps : {0.0, 0.25, 0.5}) {
      SparseModeTable smt(ra, oi, eps);
      for (Index i = 1; i <= n; ++i) {
        for (Index j = i; j <= n; ++j) {
          Decomposition d = smt.decompose({i, j});
          std::vector<int> covered(n + 1, 0);
          for (Index x = d.prefix_lo; x <= d.prefix_hi; ++x) ++covered[x];
          for (Index x = d.span_lo; x <= d.span_hi; ++x) ++covered[x];
          for (Index x = d.suffix_lo; x <= d.suffix_hi; ++x) ++covered[x];
          for (Index x = 1; x <= n; ++x)
            REQUIRE(covered[x] == (x >= i && x <= j ? 1 : 0));
          REQUIRE(d.span_empty() == (d.span_lo > d.span_hi));
        }
      }
    }
  }
}

TEST_CASE("suffix scan raises the span answer") {
  RankedArray ra(kWorked24);
  OccurrenceIndex oi(ra);
  SparseModeTable smt(ra, oi, 3.0 / 8.0);

  CHECK(smt.span_mode(2, 3) == 2);  // rank of token 20
  CHECK(smt.span_mode_freq(2, 3) == 4);

  Workspace ws;
  ModeAnswer ans = smt.query({7, 19}, ws);
  CHECK(ans.element == 20);
  CHECK(ans.frequency == 5);
  CHECK(kWorked24[ans.witness - 1] == 20);
  for (std::uint32_t cell : ws.raw()) CHECK(cell == 0);
}

TEST_CASE("pinned small query") {
  RankedArray ra(std::vector<Token>{1, 2, 2, 3, 2, 1, 1, 2, 3});
  OccurrenceIndex oi(ra);
  SparseModeTable smt(ra, oi, 0.5);
  REQUIRE(smt.block_size() == 3);
  Workspace ws;
  ModeAnswer ans = smt.query({2, 8}, ws);
  CHECK(ans.element == 2);
  CHECK(ans.frequency == 4);

  for (Index i = 1; i <= 9; ++i) {
    ans = smt.query({i, i}, ws);
    CHECK(ans.frequency == 1);
    CHECK(ans.element == ra.value_at(i));
  }
}

TEST_CASE("span tables hold exact modes and are monotone") {
  SeededRng rng(311);
  for (std::size_t n : {5, 24, 70}) {
    auto values = testref::random_tokens(rng, n, 5);
    RankedArray ra(values);
    OccurrenceIndex oi(ra);
    for (double eps : {0.25, 0.5}) {
      SparseModeTable smt(ra, oi, eps);
      const Index s = smt.block_size();
      const Index t = smt.block_count();
      for (Index bi = 0; bi < t; ++bi) {
        for (Index bj = bi; bj < t; ++bj) {
          const Index lo = bi * s + 1;
          const Index hi = std::min<Index>((bj + 1) * s, n);
          const std::uint32_t want = brute_span_freq(values, lo, hi);
          REQUIRE(smt.span_mode_freq(bi, bj) == want);
          REQUIRE(testref::multiplicity(values, lo, hi,
                                        ra.token_for(smt.span_mode(bi, bj))) ==
                  want);
          if (bj + 1 < t)
            REQUIRE(smt.span_mode_freq(bi, bj) <=
                    smt.span_mode_freq(bi, bj + 1));
          if (bi + 1 <= bj)
            REQUIRE(smt.span_mode_freq(bi, bj) >=
                    smt.span_mode_freq(bi + 1, bj));
        }
      }
    }
  }
}

TEST_CASE("query equals oracle exhaustively across epsilon and k") {
  SeededRng rng(313);
  Workspace ws, ows;
  for (std::size_t n : {1, 2, 3, 17, 64, 256}) {
    for (std::size_t k : {std::size_t{1}, std::size_t{2}, std::size_t{5}, n}) {
      auto values = testref::random_tokens(rng, n, k);
      RankedArray ra(values);
      OccurrenceIndex oi(ra);
      for (double eps : {0.0, 0.25, 0.5}) {
        SparseModeTable smt(ra, oi, eps);
        for (Index i = 1; i <= n; ++i) {
          for (Index j = i; j <= n; ++j) {
            ModeAnswer got = smt.query({i, j}, ws);
            ModeAnswer want = oracle_mode(ra, {i, j}, ows);
            REQUIRE(got.frequency == want.frequency);
            REQUIRE(got.witness >= i);
            REQUIRE(got.witness <= j);
            REQUIRE(ra.value_at(static_cast<Index>(got.witness)) ==
                    got.element);
          }
        }
      }
    }
  }
}

TEST_CASE("answers outside the partial blocks carry the span frequency") {
  // If the returned element occurs in neither partial block, nothing can
  // have outgrown the span answer, so the span frequency is final.
  SeededRng rng(317);
  Workspace ws;
  auto values = testref::random_tokens(rng, 120, 3);
  RankedArray ra(values);
  OccurrenceIndex oi(ra);
  SparseModeTable smt(ra, oi, 0.5);
  for (int t = 0; t < 2000; ++t) {
    QueryRange r = rng.range(120);
    Decomposition d = smt.decompose(r);
    if (d.span_empty()) continue;
    ModeAnswer ans = smt.query(r, ws);
    bool in_partial = false;
    for (Index x = d.prefix_lo; x <= d.prefix_hi; ++x)
      in_partial |= ra.value_at(x) == ans.element;
    for (Index x = d.suffix_lo; x <= d.suffix_hi; ++x)
      in_partial |= ra.value_at(x) == ans.element;
    if (!in_partial)
      REQUIRE(ans.frequency ==
              smt.span_mode_freq(static_cast<std::size_t>(d.first_block),
                                 static_cast<std::size_t>(d.last_block)));
  }
}

TEST_CASE("table space obeys the epsilon trade-off") {
  SeededRng rng(331);
  auto values = testref::random_tokens(rng, 1000, 50);
  RankedArray ra(values);
  OccurrenceIndex oi(ra);
  for (double eps : {0.0, 0.25, 0.5}) {
    SparseModeTable smt(ra, oi, eps);
    const std::uint64_t bound = static_cast<std::uint64_t>(
        std::ceil(std::pow(1000.0, 1.0 - eps) - 1e-9));
    CHECK(smt.table_cells() ==
          2ull * smt.block_count() * smt.block_count());
    CHECK(smt.table_cells() <= 2 * bound * bound);
  }
  SparseModeTable half(ra, oi, 0.5);
  CHECK(half.auxiliary_cells() <= 6ull * 1000);
}
