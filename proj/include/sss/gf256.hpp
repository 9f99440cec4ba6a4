#pragma once

#include <cstdint>

// GF(2^8) with reduction polynomial x^8 + x^4 + x^3 + x + 1 (0x11B).
// Addition is bitwise XOR; multiplication goes through log/antilog tables.
namespace sss::gf256 {

uint8_t mul(uint8_t a, uint8_t b);
uint8_t div(uint8_t a, uint8_t b);  // throws on b == 0
uint8_t inv(uint8_t a);             // throws on a == 0

}  // namespace sss::gf256
