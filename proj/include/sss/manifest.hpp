#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sss/scheme.hpp"

namespace sss {

struct ManifestEntry {
  int share_index = 0;
  std::string locator;  // endpoint the share was stored on
  uint32_t payload_crc32 = 0;
};

// Record of where each share of a dispersed secret lives. Line-oriented text:
//
//   object <id>
//   scheme <tag>
//   length <bytes>
//   share <index> <locator> <crc32-hex>     (one line per share)
struct Manifest {
  std::string object_id;
  SchemeId scheme = SchemeId::NT23;
  uint64_t original_length = 0;
  std::vector<ManifestEntry> entries;
};

void write_manifest(const Manifest& m, std::ostream& out);
Manifest parse_manifest(std::istream& in);

void save_manifest(const Manifest& m, const std::filesystem::path& path);
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace sss
