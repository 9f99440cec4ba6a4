#include "sss/gf256.hpp"

#include "sss/errors.hpp"

namespace sss::gf256 {

namespace {

struct Tables {
  uint8_t exp[512];
  uint8_t log[256];

  Tables() {
    // 0x03 is a generator for this reduction polynomial (0x02 is not).
    uint32_t x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[i] = static_cast<uint8_t>(x);
      log[x] = static_cast<uint8_t>(i);
      uint32_t x2 = x << 1;
      if (x2 & 0x100) x2 ^= 0x11B;
      x = x2 ^ x;  // multiply by 3
    }
    for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
    log[0] = 0;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

uint8_t mul(uint8_t a, uint8_t b) {
  if (a == 0 || b == 0) return 0;
  const Tables& t = tables();
  return t.exp[t.log[a] + t.log[b]];
}

uint8_t inv(uint8_t a) {
  if (a == 0) throw Error(Errc::BadParams, "inverse of zero in GF(256)");
  const Tables& t = tables();
  return t.exp[255 - t.log[a]];
}

uint8_t div(uint8_t a, uint8_t b) {
  if (b == 0) throw Error(Errc::BadParams, "division by zero in GF(256)");
  if (a == 0) return 0;
  const Tables& t = tables();
  int d = t.log[a] - t.log[b];
  if (d < 0) d += 255;
  return t.exp[d];
}

}  // namespace sss::gf256
