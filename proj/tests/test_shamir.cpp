#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "sss/errors.hpp"
#include "sss/gf256.hpp"
#include "sss/shamir.hpp"

using namespace sss;

namespace {

// slow shift-and-reduce multiply, the oracle for the table-driven one
uint8_t slow_mul(uint8_t a, uint8_t b) {
  uint16_t acc = 0, aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    if (aa & 0x100) aa ^= 0x11B;
    b >>= 1;
  }
  return static_cast<uint8_t>(acc);
}

}  // namespace

TEST_CASE("gf256 tables match shift-and-reduce multiplication") {
  for (int a = 0; a < 256; ++a)
    for (int b = 0; b < 256; b += 7)
      CHECK(gf256::mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b)) ==
            slow_mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b)));
  for (int a = 1; a < 256; ++a) {
    CHECK(gf256::mul(static_cast<uint8_t>(a), gf256::inv(static_cast<uint8_t>(a))) == 1);
    CHECK(gf256::div(static_cast<uint8_t>(a), static_cast<uint8_t>(a)) == 1);
  }
  CHECK_THROWS_AS(gf256::inv(0), Error);
  CHECK_THROWS_AS(gf256::div(1, 0), Error);
}

TEST_CASE("split examples") {
  const std::vector<uint8_t> zero{0x00};
  CHECK(shamir_split(0x53, 2, 3, zero) ==
        std::vector<SharePoint>{{1, 0x53}, {2, 0x53}, {3, 0x53}});
  const std::vector<uint8_t> one{0x01};
  CHECK(shamir_split(0x00, 2, 3, one) == std::vector<SharePoint>{{1, 0x01}, {2, 0x02}, {3, 0x03}});
  CHECK(shamir_split(0xFF, 2, 2, zero) == std::vector<SharePoint>{{1, 0xFF}, {2, 0xFF}});

  CHECK_THROWS_AS(shamir_split(1, 1, 3, {}), Error);
  CHECK_THROWS_AS(shamir_split(1, 3, 2, zero), Error);
  CHECK_THROWS_AS(shamir_split(1, 2, 3, {}), Error);  // wrong coefficient count
}

TEST_CASE("combine examples") {
  const std::vector<SharePoint> constant{{1, 0x53}, {2, 0x53}};
  CHECK(shamir_combine(constant) == 0x53);
  const std::vector<SharePoint> linear12{{1, 0x01}, {2, 0x02}};
  CHECK(shamir_combine(linear12) == 0x00);
  const std::vector<SharePoint> linear23{{2, 0x02}, {3, 0x03}};
  CHECK(shamir_combine(linear23) == 0x00);

  const std::vector<SharePoint> dup{{1, 0x01}, {1, 0x02}};
  CHECK_THROWS_AS(shamir_combine(dup), Error);
}

TEST_CASE("t=2 exhaustive round-trip over every coefficient, all pairs, n=3 and n=4") {
  for (int n : {3, 4}) {
    for (int s = 0; s < 256; ++s) {
      for (int c = 0; c < 256; ++c) {
        const std::vector<uint8_t> coeffs{static_cast<uint8_t>(c)};
        const auto pts = shamir_split(static_cast<uint8_t>(s), 2, n, coeffs);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            const std::vector<SharePoint> two{pts[static_cast<size_t>(i)],
                                              pts[static_cast<size_t>(j)]};
            CHECK(shamir_combine(two) == s);
          }
      }
    }
  }
}

TEST_CASE("per-share census is uniform for t=2") {
  for (int n : {3, 4}) {
    for (const uint8_t s : {uint8_t{0x00}, uint8_t{0x53}, uint8_t{0xFF}}) {
      std::vector<std::set<uint8_t>> seen(static_cast<size_t>(n));
      for (int c = 0; c < 256; ++c) {
        const std::vector<uint8_t> coeffs{static_cast<uint8_t>(c)};
        const auto pts = shamir_split(s, 2, n, coeffs);
        for (int i = 0; i < n; ++i) seen[static_cast<size_t>(i)].insert(pts[static_cast<size_t>(i)].y);
      }
      for (const auto& values : seen) CHECK(values.size() == 256);
    }
  }
}

TEST_CASE("t=3: sampled round-trip through every 3-subset") {
  std::mt19937 gen(1234);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = static_cast<uint8_t>(byte(gen));
    const std::vector<uint8_t> coeffs{static_cast<uint8_t>(byte(gen)),
                                      static_cast<uint8_t>(byte(gen))};
    const auto pts = shamir_split(s, 3, 5, coeffs);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
          const std::vector<SharePoint> three{pts[static_cast<size_t>(i)],
                                              pts[static_cast<size_t>(j)],
                                              pts[static_cast<size_t>(k)]};
          CHECK(shamir_combine(three) == s);
        }
  }
}

TEST_CASE("engine byte kernels agree with split/combine everywhere") {
  for (int s = 0; s < 256; ++s) {
    for (int c = 0; c < 256; ++c) {
      const std::vector<uint8_t> coeffs{static_cast<uint8_t>(c)};
      const auto pts = shamir_split(static_cast<uint8_t>(s), 2, 4, coeffs);
      for (int i = 1; i <= 4; ++i)
        CHECK(shamir2_share_byte(static_cast<uint8_t>(s), static_cast<uint8_t>(c), i) ==
              pts[static_cast<size_t>(i - 1)].y);
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
          const std::vector<SharePoint> two{pts[static_cast<size_t>(i - 1)],
                                            pts[static_cast<size_t>(j - 1)]};
          CHECK(shamir2_recover_byte({i, j}, two[0].y, two[1].y) == shamir_combine(two));
        }
    }
  }
}
