#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <streambuf>
#include <vector>

namespace sss {

namespace detail {

class VectorBuf : public std::streambuf {
 public:
  explicit VectorBuf(std::vector<uint8_t>& v) : v_(v) {}

 protected:
  std::streamsize xsputn(const char* s, std::streamsize n) override;
  int_type overflow(int_type ch) override;
  pos_type seekoff(off_type off, std::ios_base::seekdir dir, std::ios_base::openmode) override;
  pos_type seekpos(pos_type pos, std::ios_base::openmode) override;

 private:
  std::vector<uint8_t>& v_;
  size_t pos_ = 0;
};

class SpanBuf : public std::streambuf {
 public:
  explicit SpanBuf(std::span<const uint8_t> data);
};

class NullBuf : public std::streambuf {
 public:
  uint64_t bytes_written() const { return high_water_; }

 protected:
  std::streamsize xsputn(const char*, std::streamsize n) override;
  int_type overflow(int_type ch) override;
  pos_type seekoff(off_type off, std::ios_base::seekdir dir, std::ios_base::openmode) override;
  pos_type seekpos(pos_type pos, std::ios_base::openmode) override;

 private:
  uint64_t pos_ = 0;
  uint64_t high_water_ = 0;
};

}  // namespace detail

// Seekable ostream writing into a caller-owned byte vector.
class VectorSink : public std::ostream {
 public:
  explicit VectorSink(std::vector<uint8_t>& v) : std::ostream(nullptr), buf_(v) { rdbuf(&buf_); }

 private:
  detail::VectorBuf buf_;
};

// istream over a caller-owned byte span.
class SpanSource : public std::istream {
 public:
  explicit SpanSource(std::span<const uint8_t> data) : std::istream(nullptr), buf_(data) {
    rdbuf(&buf_);
  }

 private:
  detail::SpanBuf buf_;
};

// Seekable ostream that discards everything but remembers how much arrived.
class NullSink : public std::ostream {
 public:
  NullSink() : std::ostream(nullptr) { rdbuf(&buf_); }
  uint64_t bytes_written() const { return buf_.bytes_written(); }

 private:
  detail::NullBuf buf_;
};

}  // namespace sss
