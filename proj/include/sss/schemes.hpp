#pragma once

#include <array>
#include <cstdint>

#include "sss/scheme.hpp"

// Per-byte share/recover kernels for the four (2,n) schemes. All are pure
// functions; randomness is supplied by the caller. Recovery needs the two
// share indices — they never travel in the payload, only in the container
// header.
namespace sss {

// Multiplicative (2,3) sharing: with a the cube root of the encoded secret
// and r in {1..256}, the shares encode r*a, r^2*a, r^4*a. Any two of those
// powers determine a, whose cube is the secret.
std::array<uint8_t, 3> nt23_share(uint8_t secret, uint16_t r);
uint8_t nt23_share_one(uint8_t secret, uint16_t r, int index);
uint8_t nt23_recover(PairId pair, uint8_t x, uint8_t y);

// Multiplicative (2,4) sharing: shares encode r, r*e, r^2*e, r^3*e with e the
// encoded secret. The dealer draws r from the half range {1..128}: the (2,4)
// pair only fixes r^2, and restricting r below 129 selects one of the two
// roots, making that recovery unambiguous.
std::array<uint8_t, 4> nt24_share(uint8_t secret, uint16_t r);
uint8_t nt24_share_one(uint8_t secret, uint16_t r, int index);
uint8_t nt24_recover(PairId pair, uint8_t x, uint8_t y);

// Bit-split (2,3) sharing into nibbles: share 1 carries the odd-position bits
// (7,5,3,1 of the MSB-first byte), share 2 the even-position bits, share 3
// their XOR. Deterministic, half-size, and share 1 alone reveals the
// odd-position bits of the secret.
std::array<uint8_t, 3> xorc_share(uint8_t secret);
uint8_t xorc_share_one(uint8_t secret, int index);
uint8_t xorc_recover(PairId pair, uint8_t nx, uint8_t ny);

// Nibble-masked (2,3) XOR sharing with a random byte r = r1||r2. Writing the
// secret as s1||s2, the shares are r1||(s2^r2), (s1^r1)||r2, (s2^r1)||(s1^r2).
std::array<uint8_t, 3> xori_share(uint8_t secret, uint8_t r);
uint8_t xori_share_one(uint8_t secret, uint8_t r, int index);
uint8_t xori_recover(PairId pair, uint8_t x, uint8_t y);

}  // namespace sss
