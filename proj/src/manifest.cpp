#include "sss/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "sss/errors.hpp"
#include "sss/schemes.hpp"

namespace sss {

namespace {

[[noreturn]] void bad(const std::string& why) {
  throw Error(Errc::BadParams, "manifest: " + why);
}

}  // namespace

void write_manifest(const Manifest& m, std::ostream& out) {
  out << "object " << m.object_id << "\n";
  out << "scheme " << scheme_tag(m.scheme) << "\n";
  out << "length " << m.original_length << "\n";
  char crc[9];
  for (const auto& e : m.entries) {
    std::snprintf(crc, sizeof crc, "%08x", e.payload_crc32);
    out << "share " << e.share_index << " " << e.locator << " " << crc << "\n";
  }
}

Manifest parse_manifest(std::istream& in) {
  Manifest m;
  std::string line;
  int lineno = 0;
  bool have_object = false, have_scheme = false, have_length = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "object") {
      if (!(ls >> m.object_id)) bad("missing object id");
      have_object = true;
    } else if (key == "scheme") {
      std::string tag;
      if (!(ls >> tag)) bad("missing scheme tag");
      auto s = scheme_from_tag(tag);
      if (!s) bad("unknown scheme tag '" + tag + "'");
      m.scheme = *s;
      have_scheme = true;
    } else if (key == "length") {
      if (!(ls >> m.original_length)) bad("bad length");
      have_length = true;
    } else if (key == "share") {
      ManifestEntry e;
      std::string rest;
      if (!(ls >> e.share_index)) bad("bad share index on line " + std::to_string(lineno));
      std::getline(ls, rest);
      // locator is everything between the index and the trailing crc token;
      // it may contain spaces.
      const auto last_space = rest.find_last_of(' ');
      if (last_space == std::string::npos || last_space <= 1)
        bad("share line " + std::to_string(lineno) + " too short");
      std::string crc_hex = rest.substr(last_space + 1);
      e.locator = rest.substr(1, last_space - 1);
      if (crc_hex.size() != 8 || crc_hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        bad("bad crc on line " + std::to_string(lineno));
      e.payload_crc32 = static_cast<uint32_t>(std::stoul(crc_hex, nullptr, 16));
      m.entries.push_back(std::move(e));
    } else {
      bad("unknown key '" + key + "' on line " + std::to_string(lineno));
    }
  }
  if (!have_object || !have_scheme || !have_length) bad("missing object/scheme/length line");

  const int n = share_count(m.scheme);
  if (static_cast<int>(m.entries.size()) != n)
    bad("expected " + std::to_string(n) + " share lines, found " + std::to_string(m.entries.size()));
  std::set<int> seen;
  for (const auto& e : m.entries) {
    if (e.share_index < 1 || e.share_index > n) bad("share index out of range");
    if (!seen.insert(e.share_index).second) bad("duplicate share index");
  }
  return m;
}

void save_manifest(const Manifest& m, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw Error(Errc::IoError, "cannot create " + path.string());
  write_manifest(m, f);
  f.flush();
  if (!f) throw Error(Errc::IoError, "write failed: " + path.string());
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::IoError, "cannot open " + path.string());
  return parse_manifest(f);
}

}  // namespace sss
