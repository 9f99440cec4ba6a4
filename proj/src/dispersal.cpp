#include "sss/dispersal.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include "sss/crc32.hpp"
#include "sss/engine.hpp"
#include "sss/errors.hpp"
#include "sss/http_io.hpp"
#include "sss/schemes.hpp"
#include "sss/share_header.hpp"

namespace sss {

namespace fs = std::filesystem;

namespace {

// Scratch directory for staged share files; removed on destruction.
struct ScratchDir {
  fs::path path;

  ScratchDir() {
    std::random_device rd;
    std::ostringstream name;
    name << "sss-scratch-" << std::hex << rd() << rd();
    path = fs::temp_directory_path() / name.str();
    fs::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
};

std::string share_url_path(const std::string& object_id, int index) {
  return "/shares/" + object_id + "/" + std::to_string(index);
}

fs::path directory_share_path(const fs::path& dir, const std::string& object_id, int index) {
  return dir / object_id / std::to_string(index);
}

void check_object_id(const std::string& id) {
  if (id.empty() || id == "." || id == "..")
    throw Error(Errc::BadParams, "unusable object id '" + id + "'");
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
      throw Error(Errc::BadParams, "object id '" + id + "' has characters unfit for a path");
}

// Returns an empty string on success, a reason otherwise.
std::string store_share(const Endpoint& ep, const std::string& object_id, int index,
                        const fs::path& staged) {
  if (ep.kind == Endpoint::Kind::Http) {
    const auto res = http_put_file(ep.locator, share_url_path(object_id, index), staged);
    if (!res.ok) return res.error;
    return {};
  }
  std::error_code ec;
  const auto dest = directory_share_path(ep.locator, object_id, index);
  fs::create_directories(dest.parent_path(), ec);
  if (ec) return "cannot create " + dest.parent_path().string();
  fs::copy_file(staged, dest, fs::copy_options::overwrite_existing, ec);
  if (ec) return "cannot write " + dest.string() + ": " + ec.message();
  return {};
}

std::string fetch_share(const std::string& locator, const std::string& object_id, int index,
                        const fs::path& dest) {
  if (locator.rfind("http://", 0) == 0 || locator.rfind("https://", 0) == 0) {
    const auto res = http_get_file(locator, share_url_path(object_id, index), dest);
    if (!res.ok) return res.error;
    return {};
  }
  std::error_code ec;
  const auto src = directory_share_path(locator, object_id, index);
  if (!fs::is_regular_file(src, ec)) return "no share at " + src.string();
  fs::copy_file(src, dest, fs::copy_options::overwrite_existing, ec);
  if (ec) return "cannot read " + src.string() + ": " + ec.message();
  return {};
}

// Parses the header and recomputes the payload CRC; empty return = clean.
std::string check_share(const fs::path& file, const Manifest& m, const ManifestEntry& entry) {
  try {
    std::ifstream in(file, std::ios::binary);
    if (!in) return "cannot open fetched share";
    const ShareHeader h = read_header(in);
    if (h.scheme != m.scheme) return "scheme mismatch";
    if (h.share_index != entry.share_index) return "share index mismatch";
    if (h.original_length != m.original_length) return "length mismatch";
    if (h.payload_crc32 != entry.payload_crc32) return "CrcMismatch: header disagrees with manifest";

    uint32_t crc = 0;
    uint64_t remaining = h.payload_length();
    std::vector<uint8_t> buf(kChunkSize);
    while (remaining > 0) {
      const auto want = static_cast<size_t>(std::min<uint64_t>(remaining, buf.size()));
      in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(want));
      if (static_cast<size_t>(in.gcount()) != want) return "payload truncated";
      crc = crc32_ieee(crc, {buf.data(), want});
      remaining -= want;
    }
    if (crc != entry.payload_crc32) return "CrcMismatch: payload is corrupted";
    return {};
  } catch (const Error& e) {
    return e.what();
  }
}

}  // namespace

Endpoint make_endpoint(const std::string& locator, int index) {
  Endpoint ep;
  ep.index = index;
  if (locator.rfind("http://", 0) == 0 || locator.rfind("https://", 0) == 0) {
    ep.kind = Endpoint::Kind::Http;
    ep.locator = locator;
  } else {
    ep.kind = Endpoint::Kind::Directory;
    ep.locator = locator.rfind("dir:", 0) == 0 ? locator.substr(4) : locator;
  }
  return ep;
}

Manifest disperse(std::istream& input, SchemeId scheme, const std::vector<Endpoint>& endpoints,
                  const RngPolicy& rng, const std::string& object_id) {
  const int n = share_count(scheme);
  if (static_cast<int>(endpoints.size()) != n)
    throw Error(Errc::EndpointCountMismatch, std::string(scheme_tag(scheme)) + " needs " +
                                                 std::to_string(n) + " endpoints, got " +
                                                 std::to_string(endpoints.size()));
  check_object_id(object_id);

  ScratchDir scratch;
  std::vector<fs::path> staged;
  for (int i = 1; i <= n; ++i)
    staged.push_back(scratch.path / (object_id + ".s" + std::to_string(i)));
  const auto headers = split_to_files(input, scheme, rng, staged);

  std::vector<int> stored;
  std::vector<std::string> failures;
  for (int i = 0; i < n; ++i) {
    const auto why = store_share(endpoints[i], object_id, i + 1, staged[i]);
    if (why.empty())
      stored.push_back(i + 1);
    else
      failures.push_back("endpoint " + std::to_string(i + 1) + " (" + endpoints[i].locator +
                         "): " + why);
  }
  if (!failures.empty()) {
    std::string msg;
    for (const auto& f : failures) msg += (msg.empty() ? "" : "; ") + f;
    if (stored.empty()) throw Error(Errc::EndpointUnreachable, msg);
    std::string kept;
    for (int i : stored) kept += (kept.empty() ? "" : ",") + std::to_string(i);
    throw Error(Errc::PartialWrite, "stored shares {" + kept + "} only; " + msg);
  }

  Manifest m;
  m.object_id = object_id;
  m.scheme = scheme;
  m.original_length = headers.front().original_length;
  for (int i = 0; i < n; ++i)
    m.entries.push_back({i + 1, endpoints[i].locator, headers[i].payload_crc32});
  return m;
}

RetrieveReport retrieve(const Manifest& manifest, std::ostream& out) {
  check_object_id(manifest.object_id);
  ScratchDir scratch;

  RetrieveReport report;
  std::vector<fs::path> good_files;
  std::vector<int> good_indices;
  for (const auto& entry : manifest.entries) {
    ShareFetch fetch;
    fetch.share_index = entry.share_index;
    fetch.locator = entry.locator;

    const auto local = scratch.path / ("fetched." + std::to_string(entry.share_index));
    auto why = fetch_share(entry.locator, manifest.object_id, entry.share_index, local);
    if (why.empty()) why = check_share(local, manifest, entry);
    fetch.error = why;
    report.shares.push_back(fetch);
    if (!why.empty()) continue;

    good_files.push_back(local);
    good_indices.push_back(entry.share_index);
    if (good_files.size() == 2) break;
  }

  if (good_files.size() < 2)
    throw Error(Errc::InsufficientShares,
                "only " + std::to_string(good_files.size()) + " of " +
                    std::to_string(manifest.entries.size()) + " shares reachable and intact");

  std::ifstream a(good_files[0], std::ios::binary);
  std::ifstream b(good_files[1], std::ios::binary);
  const CombineInfo info = combine_streams(a, b, out);
  report.pair_used = info.pair;
  report.bytes_written = info.original_length;
  for (auto& s : report.shares)
    s.used = s.share_index == info.pair.lo || s.share_index == info.pair.hi;
  return report;
}

RetrieveReport retrieve_to_file(const Manifest& manifest, const fs::path& out) {
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::IoError, "cannot create " + out.string());
  try {
    auto report = retrieve(manifest, f);
    f.flush();
    if (!f) throw Error(Errc::IoError, "write failed: " + out.string());
    return report;
  } catch (...) {
    f.close();
    std::error_code ec;
    fs::remove(out, ec);
    throw;
  }
}

}  // namespace sss
