#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>

#include "sss/scheme.hpp"

namespace sss {

// Share container header, 20 octets, immediately followed by the payload.
//
//   offset  size  field
//   0       4     magic "SSS1"
//   4       1     version (1)
//   5       1     scheme wire value (1=nt23 2=nt24 3=xorc23 4=xori23
//                 5=shamir2x3 6=shamir2x4)
//   6       1     share index, 1-based
//   7       1     flags (0, reserved)
//   8       8     original secret length in bytes, unsigned little-endian
//   16      4     CRC-32 (IEEE) of the payload bytes, little-endian
//
// The payload holds original_length bytes, except for xorc23 where it holds
// ceil(original_length / 2) packed nibbles.
struct ShareHeader {
  static constexpr size_t kSize = 20;
  static constexpr std::array<uint8_t, 4> kMagic{'S', 'S', 'S', '1'};
  static constexpr uint8_t kVersion = 1;

  SchemeId scheme = SchemeId::NT23;
  uint8_t share_index = 1;
  uint8_t flags = 0;
  uint64_t original_length = 0;
  uint32_t payload_crc32 = 0;

  uint64_t payload_length() const {
    return scheme == SchemeId::XORC23 ? (original_length + 1) / 2 : original_length;
  }

  bool operator==(const ShareHeader&) const = default;
};

std::array<uint8_t, ShareHeader::kSize> write_header(const ShareHeader& h);

// Both throw Error(BadMagic/BadVersion/UnknownScheme/BadIndex) on rejects.
ShareHeader read_header(std::span<const uint8_t> bytes);
ShareHeader read_header(std::istream& in);

}  // namespace sss
