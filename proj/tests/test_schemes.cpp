#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <set>

#include "sss/errors.hpp"
#include "sss/schemes.hpp"

using namespace sss;

namespace {

const std::array<PairId, 3> kPairs3{{{1, 2}, {1, 3}, {2, 3}}};
const std::array<PairId, 6> kPairs6{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// distinct-value count and multiplicity set of one share's distribution
struct Census {
  int distinct = 0;
  std::set<int> multiplicities;
};

template <typename Counts>
Census census_of(const Counts& counts) {
  Census c;
  std::map<int, int> byval;
  for (int v = 0; v < 256; ++v)
    if (counts[v] != 0) {
      ++c.distinct;
      c.multiplicities.insert(counts[v]);
    }
  return c;
}

}  // namespace

TEST_CASE("nt23 worked examples") {
  CHECK(nt23_share(8, 5) == std::array<uint8_t, 3>{10, 50, 222});
  CHECK(nt23_share(0, 1) == std::array<uint8_t, 3>{0, 0, 0});
  CHECK(nt23_share(1, 256) == std::array<uint8_t, 3>{0, 1, 1});

  CHECK(nt23_recover({1, 2}, 10, 50) == 8);
  CHECK(nt23_recover({1, 3}, 10, 222) == 8);
  CHECK(nt23_recover({2, 3}, 50, 222) == 8);

  CHECK_THROWS_AS(nt23_recover({1, 4}, 1, 2), Error);
  CHECK_THROWS_AS(nt23_recover({2, 1}, 1, 2), Error);
}

TEST_CASE("nt23 exhaustive round-trip and census") {
  uint64_t cases = 0;
  for (int s = 0; s < 256; ++s) {
    int counts[3][256] = {};
    for (int r = 1; r <= 256; ++r) {
      const auto sh = nt23_share(static_cast<uint8_t>(s), static_cast<uint16_t>(r));
      for (int k = 0; k < 3; ++k) ++counts[k][sh[k]];
      for (const auto pair : kPairs3) {
        CHECK(nt23_recover(pair, sh[pair.lo - 1], sh[pair.hi - 1]) == s);
        ++cases;
      }
    }
    // share 1 uniform, share 2 over the squares, share 3 over fourth powers
    const Census c1 = census_of(counts[0]), c2 = census_of(counts[1]), c3 = census_of(counts[2]);
    REQUIRE(c1.distinct == 256);
    REQUIRE(c1.multiplicities == std::set<int>{1});
    REQUIRE(c2.distinct == 128);
    REQUIRE(c2.multiplicities == std::set<int>{2});
    REQUIRE(c3.distinct == 64);
    REQUIRE(c3.multiplicities == std::set<int>{4});
  }
  CHECK(cases == 196608);
}

TEST_CASE("nt24 worked examples") {
  CHECK(nt24_share(8, 5) == std::array<uint8_t, 4>{5, 40, 200, 229});
  CHECK(nt24_share(0, 1) == std::array<uint8_t, 4>{1, 0, 0, 0});
  CHECK(nt24_share(1, 2) == std::array<uint8_t, 4>{2, 2, 4, 8});

  CHECK(nt24_recover({1, 2}, 5, 40) == 8);
  CHECK(nt24_recover({2, 4}, 40, 229) == 8);
  CHECK(nt24_recover({3, 4}, 200, 229) == 8);

  CHECK_THROWS_AS(nt24_share(0, 0), Error);
  CHECK_THROWS_AS(nt24_share(0, 129), Error);  // half-range dealer draw
  CHECK_THROWS_AS(nt24_recover({1, 5}, 1, 2), Error);
}

TEST_CASE("nt24 exhaustive round-trip and census") {
  uint64_t cases = 0;
  for (int s = 0; s < 256; ++s) {
    int counts[4][256] = {};
    for (int r = 1; r <= 128; ++r) {
      const auto sh = nt24_share(static_cast<uint8_t>(s), static_cast<uint16_t>(r));
      for (int k = 0; k < 4; ++k) ++counts[k][sh[k]];
      for (const auto pair : kPairs6) {
        CHECK(nt24_recover(pair, sh[pair.lo - 1], sh[pair.hi - 1]) == s);
        ++cases;
      }
    }
    for (int k = 0; k < 4; ++k) {
      const Census c = census_of(counts[k]);
      REQUIRE(c.distinct == 128);
      REQUIRE(c.multiplicities == std::set<int>{1});
    }
  }
  CHECK(cases == 196608);
}

TEST_CASE("xorc worked examples") {
  CHECK(xorc_share(0xB4) == std::array<uint8_t, 3>{0xC, 0x6, 0xA});
  CHECK(xorc_share(0x00) == std::array<uint8_t, 3>{0x0, 0x0, 0x0});
  CHECK(xorc_share(0xFF) == std::array<uint8_t, 3>{0xF, 0xF, 0x0});

  CHECK(xorc_recover({1, 2}, 0xC, 0x6) == 0xB4);
  CHECK(xorc_recover({1, 3}, 0xC, 0xA) == 0xB4);
  CHECK(xorc_recover({2, 3}, 0x6, 0xA) == 0xB4);

  CHECK_THROWS_AS(xorc_recover({1, 4}, 0, 0), Error);
}

TEST_CASE("xorc exhaustive round-trip, parity share, odd-bit leakage") {
  for (int s = 0; s < 256; ++s) {
    const auto sh = xorc_share(static_cast<uint8_t>(s));
    for (const auto pair : kPairs3)
      CHECK(xorc_recover(pair, sh[pair.lo - 1], sh[pair.hi - 1]) == s);
    CHECK(sh[2] == (sh[0] ^ sh[1]));
    // share 1 alone pins the odd-position bits of the secret exactly
    const int odd = ((s >> 7 & 1) << 3) | ((s >> 5 & 1) << 2) | ((s >> 3 & 1) << 1) | (s >> 1 & 1);
    CHECK(sh[0] == odd);
  }
}

TEST_CASE("xori worked examples") {
  CHECK(xori_share(0xB4, 0x3A) == std::array<uint8_t, 3>{0x3E, 0x8A, 0x71});
  CHECK(xori_share(0x00, 0x00) == std::array<uint8_t, 3>{0x00, 0x00, 0x00});
  CHECK(xori_share(0x00, 0xFF) == std::array<uint8_t, 3>{0xFF, 0xFF, 0xFF});

  CHECK(xori_recover({1, 2}, 0x3E, 0x8A) == 0xB4);
  CHECK(xori_recover({1, 3}, 0x3E, 0x71) == 0xB4);
  CHECK(xori_recover({2, 3}, 0x8A, 0x71) == 0xB4);

  CHECK_THROWS_AS(xori_recover({0, 1}, 0, 0), Error);
}

TEST_CASE("xori exhaustive round-trip, census, dealer injectivity") {
  for (int s = 0; s < 256; ++s) {
    int counts[3][256] = {};
    for (int r = 0; r < 256; ++r) {
      const auto sh = xori_share(static_cast<uint8_t>(s), static_cast<uint8_t>(r));
      for (int k = 0; k < 3; ++k) ++counts[k][sh[k]];
      for (const auto pair : kPairs3)
        CHECK(xori_recover(pair, sh[pair.lo - 1], sh[pair.hi - 1]) == s);
    }
    // every share value appears exactly once over the 256 draws
    for (int k = 0; k < 3; ++k) {
      const Census c = census_of(counts[k]);
      REQUIRE(c.distinct == 256);
      REQUIRE(c.multiplicities == std::set<int>{1});
    }
  }
  // for a fixed draw, secret -> share triple is injective
  for (const uint8_t r : {uint8_t{0}, uint8_t{0x3A}, uint8_t{0xFF}}) {
    std::set<std::array<uint8_t, 3>> seen;
    for (int s = 0; s < 256; ++s) seen.insert(xori_share(static_cast<uint8_t>(s), r));
    CHECK(seen.size() == 256);
  }
}

TEST_CASE("per-index kernels agree with the full tuples") {
  for (int s = 0; s < 256; ++s) {
    const auto b = static_cast<uint8_t>(s);
    for (int r = 1; r <= 256; ++r) {
      const auto sh = nt23_share(b, static_cast<uint16_t>(r));
      for (int i = 1; i <= 3; ++i) CHECK(nt23_share_one(b, static_cast<uint16_t>(r), i) == sh[i - 1]);
    }
    for (int r = 1; r <= 128; ++r) {
      const auto sh = nt24_share(b, static_cast<uint16_t>(r));
      for (int i = 1; i <= 4; ++i) CHECK(nt24_share_one(b, static_cast<uint16_t>(r), i) == sh[i - 1]);
    }
    for (int r = 0; r < 256; ++r) {
      const auto sh = xori_share(b, static_cast<uint8_t>(r));
      for (int i = 1; i <= 3; ++i) CHECK(xori_share_one(b, static_cast<uint8_t>(r), i) == sh[i - 1]);
    }
    const auto sh = xorc_share(b);
    for (int i = 1; i <= 3; ++i) CHECK(xorc_share_one(b, i) == sh[i - 1]);
  }
}
