#include "sss/crc32.hpp"

#include <zlib.h>

namespace sss {

uint32_t crc32_ieee(uint32_t crc, std::span<const uint8_t> data) {
  uLong c = crc;
  while (!data.empty()) {
    const auto n = static_cast<uInt>(std::min<size_t>(data.size(), 1u << 30));
    c = ::crc32(c, reinterpret_cast<const Bytef*>(data.data()), n);
    data = data.subspan(n);
  }
  return static_cast<uint32_t>(c);
}

}  // namespace sss
