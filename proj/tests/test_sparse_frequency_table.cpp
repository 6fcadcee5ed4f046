#include <numeric>
#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "rangemode/errors.hpp"
#include "rangemode/sparse_frequency_table.hpp"

using namespace rangemode;

namespace {

std::vector<std::uint32_t> snap(const SparseFrequencyTable& sft,
                                std::size_t idx) {
  auto s = sft.snapshot(idx);
  return {s.begin(), s.end()};
}

// Rebuilds the post-adjustment frequency table from public pieces, the way
// the query assembles it, and checks it against a brute tally.
void check_table_assembly(const RankedArray& ra,
                          const SparseFrequencyTable& sft,
                          const std::vector<Token>& values, Index i, Index j) {
  const Rank k = ra.distinct_count();
  const std::uint32_t s = sft.block_size();
  const Index p = s * ((i - 1) / s);
  const Index pp = s * (j / s);
  std::vector<std::int64_t> table(k);
  auto lo = sft.snapshot(p / s);
  auto hi = sft.snapshot(pp / s);
  for (Rank a = 0; a < k; ++a) table[a] = std::int64_t{hi[a]} - lo[a];
  for (Index x = p + 1; x < i; ++x) --table[ra.rank_at(x) - 1];
  for (Index x = pp + 1; x <= j; ++x) ++table[ra.rank_at(x) - 1];

  std::int64_t sum = 0;
  for (Rank a = 0; a < k; ++a) {
    REQUIRE(table[a] >= 0);
    REQUIRE(table[a] ==
            testref::multiplicity(values, i, j, ra.token_for(a + 1)));
    sum += table[a];
  }
  REQUIRE(sum == j - i + 1);
}

}  // namespace

TEST_CASE("snapshot layout on pinned examples") {
  SeededRng rng(211);
  auto values16 = testref::random_tokens(rng, 16, 5);
  RankedArray ra16(values16);
  SparseFrequencyTable sft16(ra16, 4);
  CHECK(sft16.snapshot_count() == 5);  // C_0, C_4, C_8, C_12, C_16
  for (std::size_t q = 0; q < 5; ++q) CHECK(sft16.boundary(q) == 4 * q);

  RankedArray ra2(std::vector<Token>{1, 1});
  SparseFrequencyTable sft2(ra2, 1);
  CHECK(snap(sft2, 0) == std::vector<std::uint32_t>{0});
  CHECK(snap(sft2, 1) == std::vector<std::uint32_t>{1});
  CHECK(snap(sft2, 2) == std::vector<std::uint32_t>{2});

  RankedArray ra4(std::vector<Token>{1, 2, 1, 2});
  SparseFrequencyTable sft4(ra4, 2);
  CHECK(snap(sft4, 1) == std::vector<std::uint32_t>{1, 1});
  CHECK(snap(sft4, 2) == std::vector<std::uint32_t>{2, 2});
}

TEST_CASE("block size validation and auto default") {
  RankedArray ra(std::vector<Token>{5, 6, 5, 7, 6, 5});
  SparseFrequencyTable sft(ra, 0);
  CHECK(sft.block_size() == ra.distinct_count());
  CHECK_THROWS_AS(SparseFrequencyTable(ra, 7), BadBlockSizeError);
}

TEST_CASE("two tied modes across block boundaries") {
  // n = 16, k = 5, s = 4; range (6, 15) has modes 10 and 20 with frequency 3.
  std::vector<Token> values{30, 40, 50, 30, 40,            // 1..5
                            10, 20, 10, 20, 10, 20, 30, 40, 50, 50,  // 6..15
                            30};                           // 16
  RankedArray ra(values);
  REQUIRE(ra.distinct_count() == 5);
  SparseFrequencyTable sft(ra, 4);
  Workspace ws;
  ModeAnswer ans = sft.query({6, 15}, ws);
  CHECK(ans.frequency == 3);
  CHECK((ans.element == 10 || ans.element == 20));
  CHECK(values[ans.witness - 1] == ans.element);
}

TEST_CASE("snapshot invariants across block sizes") {
  SeededRng rng(223);
  for (std::size_t n : {1, 7, 16, 40, 128}) {
    for (std::size_t k : {std::size_t{1}, std::size_t{4}, n}) {
      auto values = testref::random_tokens(rng, n, k);
      RankedArray ra(values);
      const auto sizes = testref::block_sizes(
          {1, 2, ra.distinct_count(), static_cast<std::uint32_t>(n)}, n);
      for (std::uint32_t s : sizes) {
        SparseFrequencyTable sft(ra, s);
        REQUIRE(sft.snapshot_count() == (n + s - 1) / s + 1);
        REQUIRE(sft.snapshot_cells() ==
                sft.snapshot_count() * ra.distinct_count());
        for (std::size_t q = 0; q < sft.snapshot_count(); ++q) {
          auto c = sft.snapshot(q);
          std::uint64_t sum = std::accumulate(c.begin(), c.end(), 0ull);
          REQUIRE(sum == sft.boundary(q));
          if (q > 0) {
            auto prev = sft.snapshot(q - 1);
            for (Rank a = 0; a < ra.distinct_count(); ++a)
              REQUIRE(prev[a] <= c[a]);
          }
        }
      }
    }
  }
}

TEST_CASE("query equals oracle and assembled tables are exact") {
  SeededRng rng(227);
  Workspace ws, ows;
  for (std::size_t n : {1, 2, 3, 9, 16, 64, 128}) {
    for (std::size_t k : {std::size_t{2}, n}) {
      auto values = testref::random_tokens(rng, n, k);
      RankedArray ra(values);
      const auto sizes = testref::block_sizes(
          {1, 2, ra.distinct_count(), static_cast<std::uint32_t>(n)}, n);
      for (std::uint32_t s : sizes) {
        SparseFrequencyTable sft(ra, s);
        for (Index i = 1; i <= n; ++i) {
          for (Index j = i; j <= n; ++j) {
            check_table_assembly(ra, sft, values, i, j);
            ModeAnswer got = sft.query({i, j}, ws);
            ModeAnswer want = oracle_mode(ra, {i, j}, ows);
            REQUIRE(got.frequency == want.frequency);
            REQUIRE(got.witness >= i);
            REQUIRE(got.witness <= j);
            REQUIRE(ra.value_at(static_cast<Index>(got.witness)) ==
                    got.element);
            for (std::uint32_t cell : ws.raw()) REQUIRE(cell == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("whole-array query returns the global mode") {
  SeededRng rng(229);
  Workspace ws;
  auto values = testref::random_tokens(rng, 100, 6);
  RankedArray ra(values);
  SparseFrequencyTable sft(ra, 0);
  ModeAnswer got = sft.query({1, 100}, ws);
  CHECK(got.frequency == oracle_mode(ra, {1, 100}).frequency);
}

TEST_CASE("instrumented work stays within 2k + 2s + 16") {
  SeededRng rng(233);
  auto values = testref::random_tokens(rng, 512, 40);
  RankedArray ra(values);
  for (std::uint32_t s : {1u, 16u, 40u, 512u}) {
    SparseFrequencyTable sft(ra, s);
    Workspace ws;
    WorkCounters wc;
    for (int t = 0; t < 300; ++t) {
      QueryRange r = rng.range(512);
      wc.reset();
      sft.query(r, ws, &wc);
      CHECK(wc.total() <= 2ull * ra.distinct_count() + 2ull * s + 16);
    }
  }
}

TEST_CASE("linear storage at the auto block size") {
  SeededRng rng(239);
  auto values = testref::random_tokens(rng, 400, 23);
  RankedArray ra(values);
  SparseFrequencyTable sft(ra, 0);
  const std::uint64_t k = ra.distinct_count();
  CHECK(sft.snapshot_cells() <= 400 + 2 * k);
}
