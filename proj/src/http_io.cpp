#include "sss/http_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <thread>
#include <vector>

#include "httplib.h"
#include "sss/blob_server.hpp"
#include "sss/errors.hpp"

namespace sss {

namespace {

constexpr time_t kTimeoutSec = 5;

httplib::Client make_client(const std::string& base_url) {
  httplib::Client cli(base_url);
  cli.set_connection_timeout(kTimeoutSec, 0);
  cli.set_read_timeout(kTimeoutSec, 0);
  cli.set_write_timeout(kTimeoutSec, 0);
  return cli;
}

HttpResult transport_failure(const httplib::Result& res) {
  return {false, 0, httplib::to_string(res.error())};
}

// Share indices and object ids become path components on both sides; keep
// them to a safe token alphabet.
bool safe_component(const std::string& s) {
  if (s.empty() || s == "." || s == "..") return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
      return false;
  return true;
}

}  // namespace

HttpResult http_put_file(const std::string& base_url, const std::string& path,
                         const std::filesystem::path& file) {
  auto in = std::make_shared<std::ifstream>(file, std::ios::binary);
  if (!*in) throw Error(Errc::IoError, "cannot open " + file.string());
  std::error_code ec;
  const auto size = std::filesystem::file_size(file, ec);
  if (ec) throw Error(Errc::IoError, "cannot stat " + file.string());

  auto cli = make_client(base_url);
  auto res = cli.Put(
      path, static_cast<size_t>(size),
      [in](size_t offset, size_t length, httplib::DataSink& sink) {
        std::vector<char> buf(std::min<size_t>(length, 64 * 1024));
        in->seekg(static_cast<std::streamoff>(offset));
        size_t left = length;
        while (left > 0 && *in) {
          const auto want = std::min(left, buf.size());
          in->read(buf.data(), static_cast<std::streamsize>(want));
          const auto got = static_cast<size_t>(in->gcount());
          if (got == 0) break;
          if (!sink.write(buf.data(), got)) return false;
          left -= got;
        }
        return left == 0;
      },
      "application/octet-stream");
  if (!res) return transport_failure(res);
  if (res->status != 200 && res->status != 201)
    return {false, res->status, "unexpected status " + std::to_string(res->status)};
  return {true, res->status, {}};
}

HttpResult http_get_file(const std::string& base_url, const std::string& path,
                         const std::filesystem::path& dest) {
  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot create " + dest.string());

  auto cli = make_client(base_url);
  int status = 0;
  auto res = cli.Get(
      path,
      [&](const httplib::Response& response) {
        status = response.status;
        return true;
      },
      [&](const char* data, size_t n) {
        if (status == 200) out.write(data, static_cast<std::streamsize>(n));
        return static_cast<bool>(out);
      });
  if (!res) return transport_failure(res);
  out.flush();
  if (status != 200) return {false, status, "status " + std::to_string(status)};
  if (!out) throw Error(Errc::IoError, "write failed: " + dest.string());
  return {true, status, {}};
}

struct BlobServer::Impl {
  std::filesystem::path root;
  httplib::Server server;
  std::thread thread;
  int bound_port = 0;

  explicit Impl(std::filesystem::path r) : root(std::move(r)) {
    server.Put(R"(/shares/([^/]+)/([^/]+))",
               [this](const httplib::Request& req, httplib::Response& res,
                      const httplib::ContentReader& reader) { handle_put(req, res, reader); });
    server.Get(R"(/shares/([^/]+)/([^/]+))",
               [this](const httplib::Request& req, httplib::Response& res) { handle_get(req, res); });
  }

  void handle_put(const httplib::Request& req, httplib::Response& res,
                  const httplib::ContentReader& reader) {
    const std::string object = req.matches[1];
    const std::string index = req.matches[2];
    if (!safe_component(object) || !safe_component(index)) {
      res.status = 400;
      return;
    }
    std::error_code ec;
    const auto dir = root / object;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      res.status = 500;
      return;
    }
    const auto file = dir / index;
    const bool existed = std::filesystem::exists(file, ec);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
      res.status = 500;
      return;
    }
    bool write_ok = true;
    reader([&](const char* data, size_t n) {
      out.write(data, static_cast<std::streamsize>(n));
      write_ok = static_cast<bool>(out);
      return write_ok;
    });
    out.flush();
    if (!write_ok || !out) {
      res.status = 500;
      return;
    }
    res.status = existed ? 200 : 201;
  }

  void handle_get(const httplib::Request& req, httplib::Response& res) {
    const std::string object = req.matches[1];
    const std::string index = req.matches[2];
    if (!safe_component(object) || !safe_component(index)) {
      res.status = 400;
      return;
    }
    const auto file = root / object / index;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(file, ec)) {
      res.status = 404;
      return;
    }
    auto in = std::make_shared<std::ifstream>(file, std::ios::binary);
    if (!*in) {
      res.status = 500;
      return;
    }
    const auto size = std::filesystem::file_size(file, ec);
    res.set_content_provider(
        static_cast<size_t>(size), "application/octet-stream",
        [in](size_t offset, size_t length, httplib::DataSink& sink) {
          std::vector<char> buf(std::min<size_t>(length, 64 * 1024));
          in->seekg(static_cast<std::streamoff>(offset));
          const auto want = std::min(length, buf.size());
          in->read(buf.data(), static_cast<std::streamsize>(want));
          const auto got = static_cast<size_t>(in->gcount());
          if (got == 0) return false;
          return sink.write(buf.data(), got);
        });
  }

  void bind(const std::string& host, int port) {
    if (port == 0) {
      bound_port = server.bind_to_any_port(host);
      if (bound_port <= 0) throw Error(Errc::BindFailure, host + ": no free port");
    } else {
      if (!server.bind_to_port(host, port))
        throw Error(Errc::BindFailure, host + ":" + std::to_string(port));
      bound_port = port;
    }
  }
};

BlobServer::BlobServer(std::filesystem::path root) : impl_(std::make_unique<Impl>(std::move(root))) {}

BlobServer::~BlobServer() { stop(); }

void BlobServer::start(const std::string& host, int port) {
  impl_->bind(host, port);
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void BlobServer::run(const std::string& host, int port) {
  impl_->bind(host, port);
  impl_->server.listen_after_bind();
}

void BlobServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int BlobServer::port() const { return impl_->bound_port; }

}  // namespace sss
