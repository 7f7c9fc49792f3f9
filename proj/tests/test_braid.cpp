#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bm/band.hpp"
#include "bm/braid.hpp"

using namespace bm;

namespace {

BraidWord random_word(int n, int len, std::mt19937& rng) {
  BraidWord w(n);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int i = 0; i < len; ++i) w.push(gen(rng), sgn(rng) ? +1 : -1);
  return w;
}

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  // first p, then q
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = q[static_cast<std::size_t>(p[i] - 1)];
  }
  return out;
}

}  // namespace

TEST_CASE("compose, invert, power basics") {
  BraidWord s1 = generator(3, 1);
  BraidWord s2 = generator(3, 2);
  CHECK(compose(s1, invert(s1)).length() == 2);
  CHECK(equal(compose(s1, invert(s1)), identity_braid(3)));
  CHECK(equal(compose(identity_braid(3), s2), s2));
  CHECK(invert(invert(s1)).letters == s1.letters);
  CHECK(power(s1, 0).length() == 0);
  CHECK(equal(power(s1, -1), invert(s1)));
  CHECK(power(s1, 2).length() == 2);
  CHECK_THROWS(compose(generator(3, 1), generator(4, 1)));
  CHECK_THROWS(generator(3, 3));
}

TEST_CASE("defining Artin action") {
  ArtinAutomorphism a = artin_action(generator(2, 1));
  FreeWord x1x2x1inv;
  x1x2x1inv.push(1, +1);
  x1x2x1inv.push(2, +1);
  x1x2x1inv.push(1, -1);
  FreeWord x1;
  x1.push(1, +1);
  CHECK(a.images[0] == x1x2x1inv);
  CHECK(a.images[1] == x1);
  CHECK(artin_action(identity_braid(4)).images[2].letters ==
        std::vector<std::pair<int, int>>{{3, 1}});
}

TEST_CASE("braid relations and far commutation, exhaustive for n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs = identity_braid(n), rhs = identity_braid(n);
      lhs.push(i, 1); lhs.push(i + 1, 1); lhs.push(i, 1);
      rhs.push(i + 1, 1); rhs.push(i, 1); rhs.push(i + 1, 1);
      CHECK(equal(lhs, rhs));
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        CHECK(equal(compose(generator(n, i), generator(n, j)),
                    compose(generator(n, j), generator(n, i))));
      }
    }
  }
  CHECK_FALSE(equal(generator(2, 1), generator(2, 1, -1)));
}

TEST_CASE("boundary word preservation and permutation homomorphism on random words") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);  // 2..8
    BraidWord w = random_word(n, 1 + static_cast<int>(rng() % 64), rng);

    ArtinAutomorphism a = artin_action(w);
    FreeWord boundary;
    for (int i = 1; i <= n; ++i) boundary.push_word(a.images[static_cast<std::size_t>(i - 1)]);
    FreeWord expect;
    for (int i = 1; i <= n; ++i) expect.push(i, +1);
    CHECK(boundary == expect);

    BraidWord w2 = random_word(n, 1 + static_cast<int>(rng() % 32), rng);
    CHECK(permutation(compose(w, w2)) == compose_perm(permutation(w), permutation(w2)));
  }
}

TEST_CASE("abelianization: exponent sum additive and conjugation invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    BraidWord w = random_word(n, 20, rng);
    BraidWord c = random_word(n, 20, rng);
    CHECK(exponent_sum(compose(w, c)) == exponent_sum(w) + exponent_sum(c));
    CHECK(exponent_sum(compose(compose(c, w), invert(c))) == exponent_sum(w));
  }
}

TEST_CASE("block halftwist") {
  CHECK(block_halftwist(4, 5, 12).letters == std::vector<BraidLetter>{{4, 1}});
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int l = k + 1; l <= n; ++l) {
        CHECK(exponent_sum(block_halftwist(k, l, n)) ==
              (l - k + 1) * (l - k) / 2);
      }
    }
  }
  // centrality of the full twist
  std::mt19937 rng(99);
  for (int n = 3; n <= 6; ++n) {
    BraidWord full = power(block_halftwist(1, n, n), 2);
    for (int trial = 0; trial < 5; ++trial) {
      BraidWord w = random_word(n, 16, rng);
      CHECK(equal(compose(full, w), compose(w, full)));
    }
  }
  // the block halftwist induces the order-reversing permutation on the block
  std::vector<int> p = permutation(block_halftwist(2, 5, 6));
  CHECK(p == std::vector<int>{1, 5, 4, 3, 2, 6});
}

TEST_CASE("band halftwists") {
  // adjacent band with conjugator
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Band b(n, 1 + static_cast<int>(rng() % (n - 1)));
    b.rc = random_word(n, 12, rng);
    BraidWord expect = compose(compose(b.rc, generator(n, b.base)), invert(b.rc));
    CHECK(equal(band_halftwist(b), expect));
    auto [x, y] = band_endpoints(b);
    std::vector<int> p = permutation(band_halftwist(b));
    CHECK(p[static_cast<std::size_t>(x - 1)] == y);
    CHECK(p[static_cast<std::size_t>(y - 1)] == x);
  }

  // chord bands: permutation is the endpoint transposition
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (Side s : {Side::Below, Side::Above}) {
          Band b = chord_band(n, i, j, s);
          CHECK(band_endpoints(b) == std::pair<int, int>{i, j});
          CHECK(exponent_sum(power(band_halftwist(b), 3)) == 3);
        }
      }
    }
  }

  // above and below chords differ when a puncture lies strictly between
  CHECK_FALSE(band_equal(chord_band(3, 1, 3, Side::Below),
                         chord_band(3, 1, 3, Side::Above)));
  CHECK(band_equal(chord_band(3, 1, 2, Side::Below), chord_band(3, 1, 2, Side::Above)));
  // a fully detoured below chord equals the above chord
  CHECK(band_equal(chord_band(4, 1, 3, Side::Below, {2}),
                   chord_band(4, 1, 3, Side::Above)));
}
