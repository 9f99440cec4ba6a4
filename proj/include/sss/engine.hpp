#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "sss/rng.hpp"
#include "sss/scheme.hpp"
#include "sss/share_header.hpp"

namespace sss {

inline constexpr size_t kChunkSize = 64 * 1024;

// Working-buffer accounting for the streaming engine. Peak usage stays within
// a few chunk-sized buffers no matter how large the input is; the acceptance
// suite pins that bound.
namespace engine_stats {
void reset_peak();
size_t current_buffer_bytes();
size_t peak_buffer_bytes();
}  // namespace engine_stats

// Splits the input across n share streams (header + payload), one pass,
// chunk by chunk. A fresh admissible draw is made per input byte for the
// schemes that need one. Output streams must be seekable: a placeholder
// header goes out first and is patched once length and CRCs are known.
// Returns the final headers in share order.
std::vector<ShareHeader> split_stream(std::istream& in, SchemeId scheme, const RngPolicy& rng,
                                      std::span<std::ostream* const> outs);

struct CombineInfo {
  SchemeId scheme = SchemeId::NT23;
  PairId pair;
  uint64_t original_length = 0;
};

// Reconstructs the secret from any two shares of one split. Headers are
// cross-checked (same scheme, same length, distinct indices), payload CRCs
// are verified against the headers, and the output is trimmed to the
// original length. Single pass: on CrcMismatch the sink has already
// received the (suspect) bytes — callers writing files should discard them.
CombineInfo combine_streams(std::istream& a, std::istream& b, std::ostream& out);

std::vector<ShareHeader> split_to_files(std::istream& in, SchemeId scheme, const RngPolicy& rng,
                                        const std::vector<std::filesystem::path>& outputs);

std::vector<ShareHeader> split_file(const std::filesystem::path& input, SchemeId scheme,
                                    const RngPolicy& rng,
                                    const std::vector<std::filesystem::path>& outputs);

// Removes a partially written output file if reconstruction fails.
CombineInfo combine_files(const std::filesystem::path& a, const std::filesystem::path& b,
                          const std::filesystem::path& out);

}  // namespace sss
