#include "sss/rng.hpp"

#include <bit>
#include <random>

namespace sss {

namespace {

constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

uint8_t ChunkRng::next_byte() {
  if (remaining_ == 0) {
    word_ = mix64(key_ + ++counter_ * kGamma);
    remaining_ = 8;
  }
  const auto b = static_cast<uint8_t>(word_);
  word_ >>= 8;
  --remaining_;
  return b;
}

uint16_t ChunkRng::draw(uint16_t lo, uint16_t hi) {
  const uint32_t width = static_cast<uint32_t>(hi - lo) + 1;
  const uint32_t mask = std::bit_ceil(width) - 1;
  for (;;) {
    const uint32_t v = next_byte() & mask;
    if (v < width) return static_cast<uint16_t>(lo + v);
  }
}

void ChunkRng::fill_raw(std::span<uint8_t> out, uint8_t mask) {
  size_t i = 0;
  const size_t n = out.size();
  while (remaining_ != 0 && i < n) out[i++] = next_byte() & mask;
  while (n - i >= 8) {
    uint64_t w = mix64(key_ + ++counter_ * kGamma);
    for (int k = 0; k < 8; ++k) {
      out[i++] = static_cast<uint8_t>(w) & mask;
      w >>= 8;
    }
  }
  while (i < n) out[i++] = next_byte() & mask;
}

ChunkRng make_chunk_rng(const RngPolicy& policy, SchemeId scheme, uint64_t chunk_index) {
  if (policy.mode == RngPolicy::Mode::Seeded) {
    uint64_t k = mix64(policy.seed + kGamma);
    k = mix64(k ^ scheme_wire(scheme) * kGamma);
    k = mix64(k ^ chunk_index * kGamma);
    return ChunkRng(k);
  }
  std::random_device rd;
  const uint64_t k = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  return ChunkRng(mix64(k + kGamma));
}

}  // namespace sss
