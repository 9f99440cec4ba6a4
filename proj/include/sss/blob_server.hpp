#pragma once

#include <filesystem>
#include <memory>
#include <string>

namespace sss {

// Minimal HTTP/1.1 blob store, one file per (object, share index):
//
//   PUT /shares/{object}/{index}   -> 201 created, 200 overwritten
//   GET /shares/{object}/{index}   -> 200 + body, 404 if absent
//
// Bodies land under root/{object}/{index}; last writer wins per path.
// Plain, unauthenticated, loopback-oriented.
class BlobServer {
 public:
  explicit BlobServer(std::filesystem::path root);
  ~BlobServer();
  BlobServer(const BlobServer&) = delete;
  BlobServer& operator=(const BlobServer&) = delete;

  // Binds and serves on a background thread; port 0 picks a free port.
  // Throws Error(BindFailure) when the address cannot be bound.
  void start(const std::string& host, int port);

  // Blocking variant for the CLI; returns after stop().
  void run(const std::string& host, int port);

  void stop();
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sss
