#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sss/errors.hpp"
#include "sss/field257.hpp"

using namespace sss;
using namespace sss::f257;

namespace {

// Brute-force oracles over the whole 256-element group.
Elem brute_inv(Elem a) {
  for (uint32_t x = 1; x <= 256; ++x)
    if (a * x % 257 == 1) return static_cast<Elem>(x);
  return 0;
}

Elem brute_cube_root(Elem a) {
  for (uint32_t x = 1; x <= 256; ++x)
    if (x * x % 257 * x % 257 == a) return static_cast<Elem>(x);
  return 0;
}

Elem brute_sqrt_low(Elem a) {
  for (uint32_t x = 1; x <= 128; ++x)
    if (x * x % 257 == a) return static_cast<Elem>(x);
  return 0;
}

}  // namespace

TEST_CASE("byte <-> element codec") {
  CHECK(encode_byte(0) == 256);
  CHECK(encode_byte(7) == 7);
  CHECK(encode_byte(255) == 255);
  CHECK(decode_elem(256) == 0);
  CHECK(decode_elem(10) == 10);
  for (int b = 0; b < 256; ++b) {
    const Elem e = encode_byte(static_cast<uint8_t>(b));
    CHECK(e >= 1);
    CHECK(e <= 256);
    CHECK(decode_elem(e) == b);
  }
  // onto {1..256}: 256 distinct values
  bool seen[257] = {};
  for (int b = 0; b < 256; ++b) seen[encode_byte(static_cast<uint8_t>(b))] = true;
  for (int e = 1; e <= 256; ++e) CHECK(seen[e]);
}

TEST_CASE("multiplication") {
  CHECK(mul(5, 2) == 10);
  CHECK(mul(256, 256) == 1);
  CHECK(mul(111, 2) == 222);
  for (uint32_t a = 1; a <= 256; ++a)
    for (uint32_t b : {1u, 2u, 128u, 255u, 256u})
      CHECK(mul(static_cast<Elem>(a), static_cast<Elem>(b)) == a * b % 257);
}

TEST_CASE("exponentiation") {
  CHECK(f257::pow(2, 8) == 256);
  CHECK(f257::pow(5, 4) == 111);
  for (uint32_t a = 1; a <= 256; ++a) {
    CHECK(f257::pow(static_cast<Elem>(a), 0) == 1);
    CHECK(f257::pow(static_cast<Elem>(a), 256) == 1);  // group order
    CHECK(f257::pow(static_cast<Elem>(a), 513) == a);  // reduction mod 256
  }
}

TEST_CASE("inverse") {
  CHECK(inv(2) == 129);
  CHECK(inv(1) == 1);
  CHECK(inv(256) == 256);
  for (uint32_t a = 1; a <= 256; ++a) {
    const Elem x = inv(static_cast<Elem>(a));
    CHECK(mul(static_cast<Elem>(a), x) == 1);
    CHECK(x == brute_inv(static_cast<Elem>(a)));
  }
}

TEST_CASE("cube root") {
  CHECK(cube_root(8) == 2);
  CHECK(cube_root(256) == 256);
  CHECK(cube_root(2) == brute_cube_root(2));  // = 249
  CHECK(cube_root(2) == 249);
  for (uint32_t a = 1; a <= 256; ++a) {
    const Elem e = static_cast<Elem>(a);
    CHECK(cube_root(f257::pow(e, 3)) == e);
    CHECK(f257::pow(cube_root(e), 3) == e);
    // the table agrees with the inverse-of-3 exponent route
    CHECK(cube_root(e) == f257::pow(e, kCubeRootExp));
  }
}

TEST_CASE("square root, low half") {
  CHECK(sqrt_low(4) == 2);
  CHECK(sqrt_low(1) == 1);
  CHECK(sqrt_low(2) == brute_sqrt_low(2));  // 2 is a residue: 257 = 1 mod 8
  CHECK(sqrt_low(2) == 60);

  for (uint32_t a = 1; a <= 128; ++a)
    CHECK(sqrt_low(f257::pow(static_cast<Elem>(a), 2)) == a);
  for (uint32_t a = 129; a <= 256; ++a)
    CHECK(sqrt_low(f257::pow(static_cast<Elem>(a), 2)) == 257 - a);

  int residues = 0;
  for (uint32_t a = 1; a <= 256; ++a) {
    const Elem e = static_cast<Elem>(a);
    const bool qr = f257::pow(e, 128) == 1;
    CHECK(is_residue(e) == qr);
    if (qr) {
      ++residues;
      const Elem r = sqrt_low(e);
      CHECK(r <= 128);
      CHECK(mul(r, r) == e);
    } else {
      CHECK_THROWS_AS(sqrt_low(e), Error);
    }
  }
  CHECK(residues == 128);
}
