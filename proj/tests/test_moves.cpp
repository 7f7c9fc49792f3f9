#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "bm/dict.hpp"
#include "bm/moves.hpp"

using namespace bm;

TEST_CASE("move parse/format round trip") {
  for (const char* text : {"D<2,3>^1", "D<7,8>^2", "D<4,11>^3", "D12R<6>", "DR12<3>",
                           "D1412<7>", "D1412'<9>", "D1214<5>", "D1614<1>", "D1416<4>"}) {
    CAPTURE(text);
    CHECK(format_move(parse_move(text)) == text);
  }
  CHECK(parse_move("D<4,5>") == (MoveKind{MoveType::BlockTwist, 4, 5, 1}));
  CHECK_THROWS_AS(parse_move("D1412<>x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("Q<1>"), std::invalid_argument);
}

TEST_CASE("level bookkeeping and range checks") {
  CHECK(source_pairs(MoveKind{MoveType::I6toI4, 1}) == 3);
  CHECK(target_pairs(MoveKind{MoveType::I6toI4, 1}) == 2);
  CHECK(target_pairs(MoveKind{MoveType::RtoI2, 1}) == 1);
  CHECK_THROWS_AS(realize_move(MoveKind{MoveType::I4toI2, 3}, Model{10, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(realize_move(MoveKind{MoveType::I2toR, 10}, Model{10, 1}),
                  std::invalid_argument);
}

TEST_CASE("lowering words induce the expected permutations") {
  // I2toR<k> at n: the +i member (slot n-1) lands at k, the -i member (slot
  // n) at k+1; the reals k..n-2 shift right by two.
  for (int n : {8, 10}) {
    for (int k = 1; k <= n - 2; ++k) {
      auto [w, out] = realize_move(MoveKind{MoveType::I2toR, k}, Model{n, 1});
      CHECK(out == Model{n, 0});
      std::vector<int> p = permutation(w);
      CHECK(p[static_cast<std::size_t>(n - 2)] == k);
      CHECK(p[static_cast<std::size_t>(n - 1)] == k + 1);
      for (int r = 1; r <= n - 2; ++r) {
        CHECK(p[static_cast<std::size_t>(r - 1)] == (r < k ? r : r + 2));
      }
    }
  }
  // I4toI2'<k>: the outer pair moves, the inner pair keeps its slots.
  {
    auto [w, out] = realize_move(MoveKind{MoveType::I4toI2p, 2}, Model{10, 2});
    CHECK(out == Model{10, 1});
    std::vector<int> p = permutation(w);
    CHECK(p[8] == 2);   // outer +i from slot 9
    CHECK(p[9] == 3);   // outer -i from slot 10
    CHECK(p[6] == 9);   // inner pair shifts right
    CHECK(p[7] == 10);
  }
}

TEST_CASE("raising after lowering is the Picard-Lefschetz halftwist") {
  // A raising is sigma_k times the inverse lowering, so the two composites
  // around an a-type event give the local monodromy, not the identity:
  // raise-then-lower equals sigma_k; lower-then-raise its conjugate by the
  // lowering word.
  struct Pair {
    MoveType down, up;
    int max_k_offset;  // valid k range: 1 .. n - offset
    int level;         // model level of the lowered side
  };
  const Pair pairs[] = {
      {MoveType::I2toR, MoveType::RtoI2, 1, 0},
      {MoveType::I4toI2, MoveType::I2toI4, 3, 1},
      {MoveType::I6toI4, MoveType::I4toI6, 5, 2},
  };
  for (int n : {8, 10, 12}) {
    for (const Pair& pr : pairs) {
      for (int k = 1; k <= n - pr.max_k_offset; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        Model high{n, pr.level + 1};
        auto [down_w, low] = realize_move(MoveKind{pr.down, k}, high);
        auto [up_w, high2] = realize_move(MoveKind{pr.up, k}, low);
        CHECK(high2 == high);
        CHECK(equal(compose(up_w, down_w), generator(n, k)));
        BraidWord conj = compose(compose(down_w, generator(n, k)), invert(down_w));
        CHECK(equal(compose(down_w, up_w), conj));
      }
    }
  }
}

TEST_CASE("block twists commute with disjoint chords") {
  Model m{10, 0};
  auto [w, out] = realize_move(MoveKind{MoveType::BlockTwist, 3, 5, 2}, m);
  CHECK(out == m);
  Band far = chord_band(10, 7, 9, Side::Below);
  CHECK(band_equal(transport(far, w), far));
  Band inside(10, 3);
  CHECK(band_equal(transport(inside, w), inside));  // full twist fixes its block
  Band cross = chord_band(10, 4, 7, Side::Below);
  CHECK_FALSE(band_equal(transport(cross, w), cross));
}

TEST_CASE("dictionary: all eight entries hold at n = 10 and 12, every valid k") {
  for (int n : {10, 12}) {
    for (int k = 3; k <= n - 6; ++k) {
      for (const DictResult& r : run_dictionary(n, k)) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(r.name);
        CHECK(r.ok);
      }
    }
  }
}
