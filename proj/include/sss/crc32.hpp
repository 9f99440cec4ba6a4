#pragma once

#include <cstdint>
#include <span>

namespace sss {

// CRC-32 (IEEE 802.3 polynomial, the zip/png one). Start with crc = 0 and
// feed payload chunks in order.
uint32_t crc32_ieee(uint32_t crc, std::span<const uint8_t> data);

}  // namespace sss
