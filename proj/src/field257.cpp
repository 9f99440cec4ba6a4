#include "sss/field257.hpp"

#include <array>
#include <utility>

#include "sss/errors.hpp"

namespace sss::f257 {

namespace {

// x^2 -> x for x in {1..128}; zero entries mark non-residues.
constexpr std::array<Elem, kPrime> make_sqrt_low_table() {
  std::array<Elem, kPrime> t{};
  for (uint32_t x = 1; x <= 128; ++x) t[x * x % kPrime] = static_cast<Elem>(x);
  return t;
}

// x^3 -> x; complete because cubing is a bijection on the group.
constexpr std::array<Elem, kPrime> make_cube_root_table() {
  std::array<Elem, kPrime> t{};
  for (uint32_t x = 1; x <= 256; ++x) t[x * x % kPrime * x % kPrime] = static_cast<Elem>(x);
  return t;
}

constexpr auto kSqrtLow = make_sqrt_low_table();
constexpr auto kCubeRoot = make_cube_root_table();

}  // namespace

Elem pow(Elem a, uint64_t k) {
  uint32_t e = static_cast<uint32_t>(k % kGroupOrder);
  uint32_t base = a;
  uint32_t acc = 1;
  while (e != 0) {
    if (e & 1) acc = acc * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return static_cast<Elem>(acc);
}

Elem inv(Elem a) {
  int32_t t = 0, new_t = 1;
  int32_t r = kPrime, new_r = a;
  while (new_r != 0) {
    int32_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  // r == 1 always: the modulus is prime and a is nonzero.
  if (t < 0) t += kPrime;
  return static_cast<Elem>(t);
}

Elem cube_root(Elem a) { return kCubeRoot[a]; }

bool is_residue(Elem a) { return kSqrtLow[a] != 0; }

Elem sqrt_low(Elem a) {
  Elem r = kSqrtLow[a];
  if (r == 0) throw Error(Errc::NonResidue, std::to_string(a) + " has no square root mod 257");
  return r;
}

}  // namespace sss::f257
