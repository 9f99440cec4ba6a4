#pragma once

#include <cstdint>
#include <span>

#include "sss/scheme.hpp"

namespace sss {

// Randomness policy for share generation. Seeded mode is fully deterministic:
// the draw stream for chunk c depends only on (seed, scheme, c), so chunks
// can be processed in any order — or in parallel — with identical output.
// Seeded splits are reproducible and therefore insecure; default to system
// entropy outside tests.
struct RngPolicy {
  enum class Mode { SystemEntropy, Seeded };

  Mode mode = Mode::SystemEntropy;
  uint64_t seed = 0;

  static RngPolicy system_entropy() { return {}; }
  static RngPolicy seeded(uint64_t s) { return {Mode::Seeded, s}; }
};

// Counter-based byte stream: splitmix64 words dispensed little-endian.
// Stateless across chunks by construction; cheap to fork per chunk.
class ChunkRng {
 public:
  explicit ChunkRng(uint64_t key) : key_(key) {}

  uint8_t next_byte();

  // Uniform over {lo..hi} (at most 256 values) by masked rejection, so the
  // draw is exactly uniform, never just modulo-reduced.
  uint16_t draw(uint16_t lo, uint16_t hi);

  // Bulk form of next_byte() & mask, one output byte per stream byte.
  // For a power-of-two range {lo..lo+mask} this emits exactly the offsets
  // draw(lo, lo+mask) - lo would, just without the per-call overhead.
  void fill_raw(std::span<uint8_t> out, uint8_t mask);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
  uint64_t word_ = 0;
  int remaining_ = 0;
};

ChunkRng make_chunk_rng(const RngPolicy& policy, SchemeId scheme, uint64_t chunk_index);

}  // namespace sss
