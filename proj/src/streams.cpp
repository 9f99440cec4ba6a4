#include "sss/streams.hpp"

#include <cstring>

namespace sss::detail {

std::streamsize VectorBuf::xsputn(const char* s, std::streamsize n) {
  if (n <= 0) return 0;
  const auto count = static_cast<size_t>(n);
  if (pos_ + count > v_.size()) v_.resize(pos_ + count);
  std::memcpy(v_.data() + pos_, s, count);
  pos_ += count;
  return n;
}

VectorBuf::int_type VectorBuf::overflow(int_type ch) {
  if (traits_type::eq_int_type(ch, traits_type::eof())) return traits_type::not_eof(ch);
  const char c = traits_type::to_char_type(ch);
  xsputn(&c, 1);
  return ch;
}

VectorBuf::pos_type VectorBuf::seekoff(off_type off, std::ios_base::seekdir dir,
                                       std::ios_base::openmode) {
  std::streamoff base = 0;
  if (dir == std::ios_base::cur)
    base = static_cast<std::streamoff>(pos_);
  else if (dir == std::ios_base::end)
    base = static_cast<std::streamoff>(v_.size());
  const std::streamoff target = base + off;
  if (target < 0) return pos_type(off_type(-1));
  pos_ = static_cast<size_t>(target);
  return pos_type(target);
}

VectorBuf::pos_type VectorBuf::seekpos(pos_type pos, std::ios_base::openmode which) {
  return seekoff(off_type(pos), std::ios_base::beg, which);
}

SpanBuf::SpanBuf(std::span<const uint8_t> data) {
  // Read-only get area; never written through.
  auto* p = const_cast<char*>(reinterpret_cast<const char*>(data.data()));
  setg(p, p, p + data.size());
}

std::streamsize NullBuf::xsputn(const char*, std::streamsize n) {
  if (n > 0) {
    pos_ += static_cast<uint64_t>(n);
    if (pos_ > high_water_) high_water_ = pos_;
  }
  return n;
}

NullBuf::int_type NullBuf::overflow(int_type ch) {
  if (!traits_type::eq_int_type(ch, traits_type::eof())) xsputn(nullptr, 1);
  return traits_type::not_eof(ch);
}

NullBuf::pos_type NullBuf::seekoff(off_type off, std::ios_base::seekdir dir,
                                   std::ios_base::openmode) {
  std::streamoff base = 0;
  if (dir == std::ios_base::cur)
    base = static_cast<std::streamoff>(pos_);
  else if (dir == std::ios_base::end)
    base = static_cast<std::streamoff>(high_water_);
  const std::streamoff target = base + off;
  if (target < 0) return pos_type(off_type(-1));
  pos_ = static_cast<uint64_t>(target);
  return pos_type(target);
}

NullBuf::pos_type NullBuf::seekpos(pos_type pos, std::ios_base::openmode which) {
  return seekoff(off_type(pos), std::ios_base::beg, which);
}

}  // namespace sss::detail
