#include "sss/share_header.hpp"

#include <istream>
#include <string>

#include "sss/errors.hpp"
#include "sss/schemes.hpp"

namespace sss {

std::array<uint8_t, ShareHeader::kSize> write_header(const ShareHeader& h) {
  std::array<uint8_t, ShareHeader::kSize> out{};
  out[0] = ShareHeader::kMagic[0];
  out[1] = ShareHeader::kMagic[1];
  out[2] = ShareHeader::kMagic[2];
  out[3] = ShareHeader::kMagic[3];
  out[4] = ShareHeader::kVersion;
  out[5] = scheme_wire(h.scheme);
  out[6] = h.share_index;
  out[7] = h.flags;
  for (int i = 0; i < 8; ++i) out[8 + i] = static_cast<uint8_t>(h.original_length >> (8 * i));
  for (int i = 0; i < 4; ++i) out[16 + i] = static_cast<uint8_t>(h.payload_crc32 >> (8 * i));
  return out;
}

ShareHeader read_header(std::span<const uint8_t> b) {
  if (b.size() < ShareHeader::kSize)
    throw Error(Errc::BadMagic, "share truncated before the 20-octet header");
  if (b[0] != ShareHeader::kMagic[0] || b[1] != ShareHeader::kMagic[1] ||
      b[2] != ShareHeader::kMagic[2] || b[3] != ShareHeader::kMagic[3])
    throw Error(Errc::BadMagic, "not a share file");
  if (b[4] != ShareHeader::kVersion)
    throw Error(Errc::BadVersion, "container version " + std::to_string(b[4]));

  const auto scheme = scheme_from_wire(b[5]);
  if (!scheme) throw Error(Errc::UnknownScheme, "scheme wire value " + std::to_string(b[5]));

  ShareHeader h;
  h.scheme = *scheme;
  h.share_index = b[6];
  h.flags = b[7];
  if (h.share_index < 1 || h.share_index > share_count(h.scheme))
    throw Error(Errc::BadIndex, "share index " + std::to_string(b[6]) + " for scheme " +
                                    scheme_tag(h.scheme));
  h.original_length = 0;
  for (int i = 7; i >= 0; --i) h.original_length = h.original_length << 8 | b[8 + i];
  h.payload_crc32 = 0;
  for (int i = 3; i >= 0; --i) h.payload_crc32 = h.payload_crc32 << 8 | b[16 + i];
  return h;
}

ShareHeader read_header(std::istream& in) {
  std::array<uint8_t, ShareHeader::kSize> buf{};
  in.read(reinterpret_cast<char*>(buf.data()), buf.size());
  if (in.gcount() != static_cast<std::streamsize>(buf.size()))
    throw Error(Errc::BadMagic, "share truncated before the 20-octet header");
  return read_header(buf);
}

}  // namespace sss
