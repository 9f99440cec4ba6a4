#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>
#include <vector>

#include "sss/rng.hpp"

using namespace sss;

TEST_CASE("seeded streams are reproducible and keyed by (seed, scheme, chunk)") {
  const RngPolicy p = RngPolicy::seeded(123);

  auto bytes_of = [](ChunkRng rng, size_t n) {
    std::vector<uint8_t> v(n);
    for (auto& b : v) b = rng.next_byte();
    return v;
  };

  const auto a = bytes_of(make_chunk_rng(p, SchemeId::NT23, 0), 256);
  const auto b = bytes_of(make_chunk_rng(p, SchemeId::NT23, 0), 256);
  CHECK(a == b);

  CHECK(a != bytes_of(make_chunk_rng(p, SchemeId::NT23, 1), 256));
  CHECK(a != bytes_of(make_chunk_rng(p, SchemeId::NT24, 0), 256));
  CHECK(a != bytes_of(make_chunk_rng(RngPolicy::seeded(124), SchemeId::NT23, 0), 256));
}

TEST_CASE("system entropy streams differ between instances") {
  const RngPolicy p = RngPolicy::system_entropy();
  auto r1 = make_chunk_rng(p, SchemeId::NT23, 0);
  auto r2 = make_chunk_rng(p, SchemeId::NT23, 0);
  std::vector<uint8_t> a(64), b(64);
  for (auto& x : a) x = r1.next_byte();
  for (auto& x : b) x = r2.next_byte();
  CHECK(a != b);
}

TEST_CASE("draws stay inside the scheme ranges and hit every value") {
  struct Range {
    uint16_t lo, hi;
  };
  for (const Range range : {Range{1, 256}, Range{1, 128}, Range{0, 255}}) {
    auto rng = make_chunk_rng(RngPolicy::seeded(9), SchemeId::NT23, 0);
    std::set<uint16_t> seen;
    for (int i = 0; i < 100000; ++i) {
      const uint16_t d = rng.draw(range.lo, range.hi);
      REQUIRE(d >= range.lo);
      REQUIRE(d <= range.hi);
      seen.insert(d);
    }
    // 100k draws over at most 256 values: missing one has probability ~2^-500
    CHECK(seen.size() == static_cast<size_t>(range.hi - range.lo + 1));
  }
}

TEST_CASE("masked rejection is exact on a non-power-of-two range") {
  auto rng = make_chunk_rng(RngPolicy::seeded(10), SchemeId::NT23, 0);
  std::array<uint32_t, 7> counts{};
  const int total = 700000;
  for (int i = 0; i < total; ++i) {
    const uint16_t d = rng.draw(3, 9);
    REQUIRE(d >= 3);
    REQUIRE(d <= 9);
    ++counts[d - 3];
  }
  for (const auto c : counts) {
    CHECK(c > total / 7 * 0.95);
    CHECK(c < total / 7 * 1.05);
  }
}
