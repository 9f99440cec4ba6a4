#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sss/manifest.hpp"
#include "sss/rng.hpp"
#include "sss/scheme.hpp"

namespace sss {

// A storage backend holding exactly one share of a dispersed secret.
struct Endpoint {
  enum class Kind { Directory, Http };

  Kind kind = Kind::Directory;
  std::string locator;  // directory path or http://host:port base URL
  int index = 0;        // 1-based share index this endpoint holds
};

// "http://..." or "https://..." is an HTTP endpoint; anything else is a
// directory path (an optional "dir:" prefix is stripped).
Endpoint make_endpoint(const std::string& locator, int index);

// Splits the input and stores share i on endpoint i: directory endpoints get
// the share at <dir>/<object_id>/<index>, HTTP endpoints a PUT to
// /shares/<object_id>/<index>. Every store must succeed; otherwise throws
// PartialWrite naming the shares that did land (EndpointUnreachable when
// none did). Returns the manifest describing where everything lives.
Manifest disperse(std::istream& input, SchemeId scheme, const std::vector<Endpoint>& endpoints,
                  const RngPolicy& rng, const std::string& object_id);

struct ShareFetch {
  int share_index = 0;
  std::string locator;
  bool used = false;
  std::string error;  // empty when the share was fetched and checked clean
};

struct RetrieveReport {
  PairId pair_used;
  uint64_t bytes_written = 0;
  std::vector<ShareFetch> shares;  // manifest order; the attempted prefix
};

// Fetches shares in manifest order until two distinct-index shares with
// valid CRC are in hand, then reconstructs. A corrupted or unreachable share
// is recorded and skipped. Throws InsufficientShares when fewer than two
// clean shares are reachable.
RetrieveReport retrieve(const Manifest& manifest, std::ostream& out);
RetrieveReport retrieve_to_file(const Manifest& manifest, const std::filesystem::path& out);

}  // namespace sss
