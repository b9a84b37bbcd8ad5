#include <doctest.h>

#include <random>
#include <vector>

#include "hog/interval_cover_tree.hpp"
#include "hog/string_set.hpp"

using namespace hog;

TEST_CASE("cover and count on a small range") {
  IntervalCoverTree t(10);
  CHECK(t.uncovered(0, 9) == 10);
  t.cover(2, 5);
  CHECK(t.uncovered(0, 9) == 6);
  CHECK(t.uncovered(2, 5) == 0);
  CHECK(t.uncovered(5, 6) == 1);
  t.cover(0, 9);
  CHECK(t.uncovered(0, 9) == 0);
  CHECK_THROWS_AS(t.cover(3, 2), Error);
  CHECK_THROWS_AS(t.uncovered(0, 10), Error);
}

TEST_CASE("random covers match a plain array, rollback restores the checkpoint") {
  std::mt19937_64 rng(3);
  for (std::uint32_t size : {1u, 2u, 7u, 64u, 100u}) {
    IntervalCoverTree t(size);
    std::vector<bool> covered(size, false);
    for (int pass = 0; pass < 30; ++pass) {
      t.checkpoint();
      const auto hash = t.state_hash();
      const auto saved = covered;
      for (int op = 0; op < 20; ++op) {
        std::uint32_t lo = rng() % size, hi = rng() % size;
        if (lo > hi) std::swap(lo, hi);
        if (rng() % 2) {
          t.cover(lo, hi);
          for (std::uint32_t x = lo; x <= hi; ++x) covered[x] = true;
        } else {
          std::uint32_t want = 0;
          for (std::uint32_t x = lo; x <= hi; ++x) want += !covered[x];
          REQUIRE(t.uncovered(lo, hi) == want);
        }
      }
      if (pass % 3 != 0) {
        t.rollback();
        covered = saved;
        CHECK(t.state_hash() == hash);
      }
    }
  }
}

TEST_CASE("writes are counted and only on change") {
  IntervalCoverTree t(8);
  t.cover(0, 7);
  const auto w = t.writes();
  CHECK(w > 0);
  t.cover(1, 3);
  CHECK(t.writes() == w);
}
