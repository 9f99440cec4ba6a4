#pragma once

#include <cstdint>

// Arithmetic in Z_257*, the multiplicative group of nonzero residues mod the
// prime 257. Elements live in {1..256}; payload bytes map onto them through
// the bijection 0 <-> 256 (encode_byte/decode_elem). The group has order 256.
namespace sss::f257 {

inline constexpr uint32_t kPrime = 257;
inline constexpr uint32_t kGroupOrder = 256;

// 3 * 171 = 513 = 2*256 + 1, so x -> x^171 inverts cubing (gcd(3,256) = 1
// makes cubing a bijection on the group).
inline constexpr uint32_t kCubeRootExp = 171;

// Always in [1, 256].
using Elem = uint16_t;

constexpr Elem encode_byte(uint8_t b) { return b == 0 ? Elem{256} : Elem{b}; }

constexpr uint8_t decode_elem(Elem e) {
  return e == 256 ? uint8_t{0} : static_cast<uint8_t>(e);
}

constexpr Elem mul(Elem a, Elem b) {
  return static_cast<Elem>(uint32_t(a) * uint32_t(b) % kPrime);
}

// a^k with the exponent reduced mod the group order.
Elem pow(Elem a, uint64_t k);

// Multiplicative inverse by the extended Euclidean algorithm.
Elem inv(Elem a);

// The unique x with x^3 = a.
Elem cube_root(Elem a);

// The square root lying in {1..128}; the other root is its negation 257 - x.
// Throws Error(NonResidue) when a has no square root.
Elem sqrt_low(Elem a);

bool is_residue(Elem a);

}  // namespace sss::f257
