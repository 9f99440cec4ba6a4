#pragma once

#include <filesystem>
#include <string>

namespace sss {

// Outcome of one blob transfer. ok means the HTTP exchange succeeded with an
// acceptable status; otherwise `error` says what went wrong (status is 0 when
// the endpoint could not be reached at all).
struct HttpResult {
  bool ok = false;
  int status = 0;
  std::string error;
};

// PUT base_url + path with the file as body; 200 and 201 count as success.
HttpResult http_put_file(const std::string& base_url, const std::string& path,
                         const std::filesystem::path& file);

// GET base_url + path, streaming the body into dest. 404 is reported as a
// failure with status 404, not an exception.
HttpResult http_get_file(const std::string& base_url, const std::string& path,
                         const std::filesystem::path& dest);

}  // namespace sss
