#include "sss/schemes.hpp"

#include <string>

#include "sss/errors.hpp"
#include "sss/field257.hpp"

namespace sss {

using f257::decode_elem;
using f257::Elem;
using f257::encode_byte;
using f257::inv;
using f257::mul;

int share_count(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::NT23:
    case SchemeId::XORC23:
    case SchemeId::XORI23:
    case SchemeId::Shamir2x3:
      return 3;
    case SchemeId::NT24:
    case SchemeId::Shamir2x4:
      return 4;
  }
  throw Error(Errc::UnknownScheme, "scheme wire value " + std::to_string(scheme_wire(scheme)));
}

const char* scheme_tag(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::NT23: return "nt23";
    case SchemeId::NT24: return "nt24";
    case SchemeId::XORC23: return "xorc23";
    case SchemeId::XORI23: return "xori23";
    case SchemeId::Shamir2x3: return "shamir2x3";
    case SchemeId::Shamir2x4: return "shamir2x4";
  }
  return "?";
}

std::optional<SchemeId> scheme_from_tag(std::string_view tag) {
  for (uint8_t w = 1; w <= 6; ++w) {
    auto s = static_cast<SchemeId>(w);
    if (tag == scheme_tag(s)) return s;
  }
  return std::nullopt;
}

std::optional<SchemeId> scheme_from_wire(uint8_t value) {
  if (value < 1 || value > 6) return std::nullopt;
  return static_cast<SchemeId>(value);
}

namespace {

void check_draw(uint16_t r, uint16_t lo, uint16_t hi) {
  if (r < lo || r > hi)
    throw Error(Errc::RandomOutOfRange, "draw " + std::to_string(r) + " outside {" +
                                            std::to_string(lo) + ".." + std::to_string(hi) + "}");
}

[[noreturn]] void bad_pair(PairId p) {
  throw Error(Errc::InvalidPair,
              "no recovery for indices (" + std::to_string(p.lo) + "," + std::to_string(p.hi) + ")");
}

// Odd-position bits (7,5,3,1) of an MSB-first byte, packed into one nibble.
constexpr uint8_t odd_bits(uint8_t b) {
  return static_cast<uint8_t>(((b >> 7 & 1) << 3) | ((b >> 5 & 1) << 2) | ((b >> 3 & 1) << 1) |
                              (b >> 1 & 1));
}

constexpr uint8_t even_bits(uint8_t b) {
  return static_cast<uint8_t>(((b >> 6 & 1) << 3) | ((b >> 4 & 1) << 2) | ((b >> 2 & 1) << 1) |
                              (b & 1));
}

// Reassembles a byte from two nibbles, alternating n1[k], n2[k] MSB-first.
constexpr uint8_t intermix(uint8_t n1, uint8_t n2) {
  uint8_t out = 0;
  for (int k = 3; k >= 0; --k)
    out = static_cast<uint8_t>((out << 2) | ((n1 >> k & 1) << 1) | (n2 >> k & 1));
  return out;
}

}  // namespace

uint8_t nt23_share_one(uint8_t secret, uint16_t r, int index) {
  check_draw(r, 1, 256);
  const Elem a = f257::cube_root(encode_byte(secret));
  Elem p = r;                       // r^1
  if (index >= 2) p = mul(p, p);    // r^2
  if (index == 3) p = mul(p, p);    // r^4
  return decode_elem(mul(p, a));
}

std::array<uint8_t, 3> nt23_share(uint8_t secret, uint16_t r) {
  return {nt23_share_one(secret, r, 1), nt23_share_one(secret, r, 2), nt23_share_one(secret, r, 3)};
}

uint8_t nt23_recover(PairId pair, uint8_t x, uint8_t y) {
  const Elem X = encode_byte(x);
  const Elem Y = encode_byte(y);
  if (pair == PairId{1, 3}) {
    // X^4 / Y = a^3
    const Elem x2 = mul(X, X);
    return decode_elem(mul(mul(x2, x2), inv(Y)));
  }
  if (pair == PairId{1, 2} || pair == PairId{2, 3}) {
    // X^2 / Y = a; cube it
    const Elem a = mul(mul(X, X), inv(Y));
    return decode_elem(mul(mul(a, a), a));
  }
  bad_pair(pair);
}

uint8_t nt24_share_one(uint8_t secret, uint16_t r, int index) {
  check_draw(r, 1, 128);
  if (index == 1) return decode_elem(static_cast<Elem>(r));
  const Elem e = encode_byte(secret);
  Elem p = r;
  if (index >= 3) p = mul(p, static_cast<Elem>(r));  // r^2
  if (index == 4) p = mul(p, static_cast<Elem>(r));  // r^3
  return decode_elem(mul(p, e));
}

std::array<uint8_t, 4> nt24_share(uint8_t secret, uint16_t r) {
  return {nt24_share_one(secret, r, 1), nt24_share_one(secret, r, 2), nt24_share_one(secret, r, 3),
          nt24_share_one(secret, r, 4)};
}

uint8_t nt24_recover(PairId pair, uint8_t x, uint8_t y) {
  const Elem X = encode_byte(x);
  const Elem Y = encode_byte(y);
  if (pair == PairId{1, 2}) return decode_elem(mul(Y, inv(X)));
  if (pair == PairId{1, 3}) return decode_elem(mul(inv(mul(X, X)), Y));
  if (pair == PairId{1, 4}) return decode_elem(mul(inv(mul(mul(X, X), X)), Y));
  if (pair == PairId{2, 3}) return decode_elem(mul(mul(X, X), inv(Y)));
  if (pair == PairId{2, 4}) {
    // Y/X = r^2; the dealer's half-range draw picks the low root.
    const Elem r = f257::sqrt_low(mul(Y, inv(X)));
    return decode_elem(mul(X, inv(r)));
  }
  if (pair == PairId{3, 4}) {
    const Elem x3 = mul(mul(X, X), X);
    return decode_elem(mul(x3, inv(mul(Y, Y))));
  }
  bad_pair(pair);
}

uint8_t xorc_share_one(uint8_t secret, int index) {
  switch (index) {
    case 1: return odd_bits(secret);
    case 2: return even_bits(secret);
    default: return static_cast<uint8_t>(odd_bits(secret) ^ even_bits(secret));
  }
}

std::array<uint8_t, 3> xorc_share(uint8_t secret) {
  return {xorc_share_one(secret, 1), xorc_share_one(secret, 2), xorc_share_one(secret, 3)};
}

uint8_t xorc_recover(PairId pair, uint8_t nx, uint8_t ny) {
  nx &= 0x0F;
  ny &= 0x0F;
  uint8_t n1, n2;
  if (pair == PairId{1, 2}) {
    n1 = nx;
    n2 = ny;
  } else if (pair == PairId{1, 3}) {
    n1 = nx;
    n2 = static_cast<uint8_t>(nx ^ ny);
  } else if (pair == PairId{2, 3}) {
    n1 = static_cast<uint8_t>(nx ^ ny);
    n2 = nx;
  } else {
    bad_pair(pair);
  }
  return intermix(n1, n2);
}

uint8_t xori_share_one(uint8_t secret, uint8_t r, int index) {
  const uint8_t s1 = secret >> 4, s2 = secret & 0x0F;
  const uint8_t r1 = r >> 4, r2 = r & 0x0F;
  switch (index) {
    case 1: return static_cast<uint8_t>(r1 << 4 | (s2 ^ r2));
    case 2: return static_cast<uint8_t>((s1 ^ r1) << 4 | r2);
    default: return static_cast<uint8_t>((s2 ^ r1) << 4 | (s1 ^ r2));
  }
}

std::array<uint8_t, 3> xori_share(uint8_t secret, uint8_t r) {
  return {xori_share_one(secret, r, 1), xori_share_one(secret, r, 2), xori_share_one(secret, r, 3)};
}

uint8_t xori_recover(PairId pair, uint8_t x, uint8_t y) {
  const uint8_t xh = x >> 4, xl = x & 0x0F;
  const uint8_t yh = y >> 4, yl = y & 0x0F;
  uint8_t s1, s2;
  if (pair == PairId{1, 2}) {
    s1 = static_cast<uint8_t>(xh ^ yh);
    s2 = static_cast<uint8_t>(xl ^ yl);
  } else if (pair == PairId{1, 3}) {
    s2 = static_cast<uint8_t>(xh ^ yh);
    s1 = static_cast<uint8_t>(xl ^ yl ^ s2);
  } else if (pair == PairId{2, 3}) {
    s1 = static_cast<uint8_t>(xl ^ yl);
    s2 = static_cast<uint8_t>(xh ^ yh ^ s1);
  } else {
    bad_pair(pair);
  }
  return static_cast<uint8_t>(s1 << 4 | s2);
}

}  // namespace sss
