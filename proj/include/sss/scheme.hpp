#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace sss {

// Wire values; byte 5 of the share container header.
enum class SchemeId : uint8_t {
  NT23 = 1,       // (2,3), multiplicative sharing mod 257
  NT24 = 2,       // (2,4), multiplicative sharing mod 257
  XORC23 = 3,     // (2,3), bit-split XOR, half-size shares
  XORI23 = 4,     // (2,3), nibble-masking XOR, full-size shares
  Shamir2x3 = 5,  // (2,3), polynomial over GF(256), reference baseline
  Shamir2x4 = 6,  // (2,4), polynomial over GF(256), reference baseline
};

int share_count(SchemeId scheme);
const char* scheme_tag(SchemeId scheme);
std::optional<SchemeId> scheme_from_tag(std::string_view tag);
std::optional<SchemeId> scheme_from_wire(uint8_t value);

inline uint8_t scheme_wire(SchemeId scheme) { return static_cast<uint8_t>(scheme); }

// The two share indices driving a recovery, 1-based, lo < hi.
struct PairId {
  int lo = 0;
  int hi = 0;

  bool operator==(const PairId&) const = default;
};

}  // namespace sss
