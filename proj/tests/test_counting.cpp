#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "rangemode/counting.hpp"

using namespace rangemode;

TEST_CASE("counting query pinned examples") {
  Workspace ws;
  RankedArray ra(std::vector<Token>{1, 2, 2, 3, 2, 1, 1, 2, 3});
  ModeAnswer ans = counting_query(ra, ws, {2, 8});
  CHECK(ans.element == 2);
  CHECK(ans.frequency == 4);

  RankedArray uniform(std::vector<Token>{9, 9, 9});
  ans = counting_query(uniform, ws, {1, 3});
  CHECK(ans.element == 9);
  CHECK(ans.frequency == 3);

  for (Index i = 1; i <= ra.size(); ++i) {
    ans = counting_query(ra, ws, {i, i});
    CHECK(ans.frequency == 1);
    CHECK(ans.witness == i);
  }
}

TEST_CASE("counting query matches the oracle exhaustively") {
  SeededRng rng(101);
  Workspace ws, oracle_ws;
  for (std::size_t n : {1, 2, 3, 17, 64, 129, 256}) {
    for (std::size_t k : {std::size_t{1}, std::size_t{3}, n}) {
      auto values = testref::random_tokens(rng, n, k);
      RankedArray ra(values);
      for (Index i = 1; i <= n; ++i) {
        for (Index j = i; j <= n; ++j) {
          ModeAnswer got = counting_query(ra, ws, {i, j});
          ModeAnswer want = oracle_mode(ra, {i, j}, oracle_ws);
          REQUIRE(got.frequency == want.frequency);
          REQUIRE(got.witness >= i);
          REQUIRE(got.witness <= j);
          REQUIRE(ra.value_at(static_cast<Index>(got.witness)) == got.element);
        }
      }
    }
  }
}

TEST_CASE("counting query restores the workspace and bounds its work") {
  SeededRng rng(103);
  auto values = testref::random_tokens(rng, 200, 9);
  RankedArray ra(values);
  Workspace ws;
  WorkCounters wc;
  for (int t = 0; t < 500; ++t) {
    QueryRange r = rng.range(200);
    wc.reset();
    counting_query(ra, ws, r, &wc);
    CHECK(wc.cells_touched <= 4 * (r.length()) + 8);
    for (std::uint32_t cell : ws.raw()) REQUIRE(cell == 0);
  }
}
