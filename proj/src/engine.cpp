#include "sss/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>

#include "sss/crc32.hpp"
#include "sss/errors.hpp"
#include "sss/field257.hpp"
#include "sss/schemes.hpp"
#include "sss/shamir.hpp"

namespace sss {

namespace engine_stats {
namespace {
std::atomic<size_t> g_current{0};
std::atomic<size_t> g_peak{0};

void add(size_t n) {
  const size_t now = g_current.fetch_add(n) + n;
  size_t peak = g_peak.load();
  while (now > peak && !g_peak.compare_exchange_weak(peak, now)) {
  }
}

void sub(size_t n) { g_current.fetch_sub(n); }
}  // namespace

void reset_peak() { g_peak.store(g_current.load()); }
size_t current_buffer_bytes() { return g_current.load(); }
size_t peak_buffer_bytes() { return g_peak.load(); }
}  // namespace engine_stats

namespace {

// All per-chunk working memory goes through this so the peak stays auditable.
struct ChunkBuffer {
  explicit ChunkBuffer(size_t n) : data(n) { engine_stats::add(n); }
  ~ChunkBuffer() { engine_stats::sub(data.size()); }
  ChunkBuffer(const ChunkBuffer&) = delete;
  ChunkBuffer& operator=(const ChunkBuffer&) = delete;

  std::vector<uint8_t> data;
};

bool needs_draws(SchemeId scheme) { return scheme != SchemeId::XORC23; }

// Raw draw bytes are stored offset from the scheme's range: the NT schemes
// keep r - 1, the byte-draw schemes keep the byte itself. All three admissible
// ranges are power-of-two sized, so a masked stream byte is an exact draw.
uint8_t draw_mask(SchemeId scheme) { return scheme == SchemeId::NT24 ? 0x7F : 0xFF; }

// The per-byte work below is lookup-driven: small tables, derived from the
// scheme kernels once at first use, replace per-byte calls in the streaming
// loops. The kernels stay the source of truth; the unit suite checks the
// engine output against them.

struct Nt23Tables {
  std::array<std::array<f257::Elem, 256>, 3> pow;  // draw -> r^1, r^2, r^4
  std::array<f257::Elem, 256> cbrt_enc;            // secret -> cube root of its encoding

  Nt23Tables() {
    for (uint32_t d = 0; d < 256; ++d) {
      const f257::Elem r = static_cast<f257::Elem>(d + 1);
      pow[0][d] = r;
      pow[1][d] = f257::mul(r, r);
      pow[2][d] = f257::mul(pow[1][d], pow[1][d]);
    }
    for (uint32_t s = 0; s < 256; ++s)
      cbrt_enc[s] = f257::cube_root(f257::encode_byte(static_cast<uint8_t>(s)));
  }
};

struct Nt24Tables {
  std::array<std::array<f257::Elem, 128>, 3> pow;  // draw -> r^1, r^2, r^3
  std::array<f257::Elem, 256> enc;

  Nt24Tables() {
    for (uint32_t d = 0; d < 128; ++d) {
      const f257::Elem r = static_cast<f257::Elem>(d + 1);
      pow[0][d] = r;
      pow[1][d] = f257::mul(r, r);
      pow[2][d] = f257::mul(pow[1][d], r);
    }
    for (uint32_t s = 0; s < 256; ++s) enc[s] = f257::encode_byte(static_cast<uint8_t>(s));
  }
};

struct XorcTables {
  std::array<std::array<uint8_t, 256>, 3> nib;  // secret -> share nibble

  XorcTables() {
    for (int i = 0; i < 3; ++i)
      for (uint32_t s = 0; s < 256; ++s)
        nib[static_cast<size_t>(i)][s] = xorc_share_one(static_cast<uint8_t>(s), i + 1);
  }
};

struct ShamirTables {
  std::array<std::array<uint8_t, 256>, 4> mul_index;  // coeff -> coeff * index

  ShamirTables() {
    for (int i = 1; i <= 4; ++i)
      for (uint32_t c = 0; c < 256; ++c)
        mul_index[static_cast<size_t>(i - 1)][c] =
            shamir2_share_byte(0, static_cast<uint8_t>(c), i);
  }
};

const Nt23Tables& nt23_tables() { static const Nt23Tables t; return t; }
const Nt24Tables& nt24_tables() { static const Nt24Tables t; return t; }
const XorcTables& xorc_tables() { static const XorcTables t; return t; }
const ShamirTables& shamir_tables() { static const ShamirTables t; return t; }

// Produces share `index`'s payload for one input chunk; returns its length.
size_t share_pass(SchemeId scheme, int index, std::span<const uint8_t> in,
                  std::span<const uint8_t> draws, uint8_t* out) {
  const size_t n = in.size();
  switch (scheme) {
    case SchemeId::NT23: {
      const Nt23Tables& t = nt23_tables();
      const auto& pow = t.pow[static_cast<size_t>(index - 1)];
      for (size_t i = 0; i < n; ++i)
        out[i] = f257::decode_elem(f257::mul(pow[draws[i]], t.cbrt_enc[in[i]]));
      return n;
    }
    case SchemeId::NT24: {
      const Nt24Tables& t = nt24_tables();
      if (index == 1) {
        // share 1 is the draw itself; r <= 128 decodes to itself
        for (size_t i = 0; i < n; ++i) out[i] = static_cast<uint8_t>(draws[i] + 1);
        return n;
      }
      const auto& pow = t.pow[static_cast<size_t>(index - 2)];
      for (size_t i = 0; i < n; ++i)
        out[i] = f257::decode_elem(f257::mul(pow[draws[i]], t.enc[in[i]]));
      return n;
    }
    case SchemeId::XORI23:
      for (size_t i = 0; i < n; ++i) out[i] = xori_share_one(in[i], draws[i], index);
      return n;
    case SchemeId::Shamir2x3:
    case SchemeId::Shamir2x4: {
      const auto& mul_index = shamir_tables().mul_index[static_cast<size_t>(index - 1)];
      for (size_t i = 0; i < n; ++i) out[i] = static_cast<uint8_t>(in[i] ^ mul_index[draws[i]]);
      return n;
    }
    case SchemeId::XORC23: {
      // Two nibbles per payload byte, earlier input byte in the high nibble;
      // an odd tail (only possible at end of input) is zero-padded.
      const auto& nib = xorc_tables().nib[static_cast<size_t>(index - 1)];
      size_t o = 0;
      for (size_t i = 0; i + 1 < n; i += 2)
        out[o++] = static_cast<uint8_t>(nib[in[i]] << 4 | nib[in[i + 1]]);
      if (n % 2 != 0) out[o++] = static_cast<uint8_t>(nib[in[n - 1]] << 4);
      return o;
    }
  }
  throw Error(Errc::UnknownScheme, "share pass");
}

// secret = recover_table(...)[x << 8 | y]; kInvalidEntry marks (x, y) pairs no
// honest dealer can emit (the non-residue case of the (2,4) S2S4 route).
constexpr uint16_t kInvalidEntry = 0xFFFF;

using RecoverTable = std::array<uint16_t, 65536>;

RecoverTable build_recover_table(SchemeId scheme, PairId pair) {
  RecoverTable t;
  for (uint32_t x = 0; x < 256; ++x) {
    for (uint32_t y = 0; y < 256; ++y) {
      uint16_t v;
      try {
        switch (scheme) {
          case SchemeId::NT23:
            v = nt23_recover(pair, static_cast<uint8_t>(x), static_cast<uint8_t>(y));
            break;
          case SchemeId::NT24:
            v = nt24_recover(pair, static_cast<uint8_t>(x), static_cast<uint8_t>(y));
            break;
          case SchemeId::XORI23:
            v = xori_recover(pair, static_cast<uint8_t>(x), static_cast<uint8_t>(y));
            break;
          default:
            v = shamir2_recover_byte(pair, static_cast<uint8_t>(x), static_cast<uint8_t>(y));
            break;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::NonResidue) throw;
        v = kInvalidEntry;
      }
      t[x << 8 | y] = v;
    }
  }
  return t;
}

const RecoverTable& recover_table(SchemeId scheme, PairId pair) {
  static std::mutex mutex;
  static std::map<uint32_t, RecoverTable> cache;
  const uint32_t key = static_cast<uint32_t>(scheme_wire(scheme)) << 16 |
                       static_cast<uint32_t>(pair.lo) << 8 | static_cast<uint32_t>(pair.hi);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_recover_table(scheme, pair)).first;
  return it->second;
}

void write_all(std::ostream& os, const uint8_t* data, size_t n, const char* what) {
  os.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
  if (!os) throw Error(Errc::IoError, std::string("write failed: ") + what);
}

void read_payload_exact(std::istream& in, uint8_t* data, size_t n, int share_index) {
  in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n));
  if (in.bad()) throw Error(Errc::IoError, "read failed on share " + std::to_string(share_index));
  if (static_cast<size_t>(in.gcount()) != n)
    throw Error(Errc::LengthMismatch,
                "share " + std::to_string(share_index) + " payload shorter than its header says");
}

}  // namespace

std::vector<ShareHeader> split_stream(std::istream& in, SchemeId scheme, const RngPolicy& rng,
                                      std::span<std::ostream* const> outs) {
  const int n_shares = share_count(scheme);
  if (static_cast<int>(outs.size()) != n_shares)
    throw Error(Errc::BadParams, std::string(scheme_tag(scheme)) + " produces " +
                                     std::to_string(n_shares) + " shares, got " +
                                     std::to_string(outs.size()) + " outputs");

  // Placeholder headers; patched after the payload pass.
  const std::array<uint8_t, ShareHeader::kSize> zeros{};
  for (auto* o : outs) write_all(*o, zeros.data(), zeros.size(), "share header");

  ChunkBuffer input(kChunkSize);
  ChunkBuffer draws(needs_draws(scheme) ? kChunkSize : 0);
  ChunkBuffer payload(kChunkSize);

  std::vector<uint32_t> crc(static_cast<size_t>(n_shares), 0);
  uint64_t total = 0;
  uint64_t chunk_index = 0;

  for (;;) {
    in.read(reinterpret_cast<char*>(input.data.data()), kChunkSize);
    if (in.bad()) throw Error(Errc::IoError, "read failed on input");
    const auto got = static_cast<size_t>(in.gcount());
    if (got == 0) break;

    std::span<const uint8_t> chunk_draws;
    if (needs_draws(scheme)) {
      ChunkRng cr = make_chunk_rng(rng, scheme, chunk_index);
      cr.fill_raw({draws.data.data(), got}, draw_mask(scheme));
      chunk_draws = {draws.data.data(), got};
    }
    for (int idx = 1; idx <= n_shares; ++idx) {
      const size_t plen = share_pass(scheme, idx, {input.data.data(), got}, chunk_draws,
                                     payload.data.data());
      crc[idx - 1] = crc32_ieee(crc[idx - 1], {payload.data.data(), plen});
      write_all(*outs[idx - 1], payload.data.data(), plen, "share payload");
    }
    total += got;
    ++chunk_index;
    if (got < kChunkSize) break;  // end of input
  }

  std::vector<ShareHeader> headers;
  headers.reserve(static_cast<size_t>(n_shares));
  for (int idx = 1; idx <= n_shares; ++idx) {
    ShareHeader h;
    h.scheme = scheme;
    h.share_index = static_cast<uint8_t>(idx);
    h.original_length = total;
    h.payload_crc32 = crc[idx - 1];
    auto bytes = write_header(h);
    auto* o = outs[idx - 1];
    o->seekp(0);
    if (!*o) throw Error(Errc::IoError, "share output is not seekable");
    write_all(*o, bytes.data(), bytes.size(), "share header");
    o->flush();
    headers.push_back(h);
  }
  return headers;
}

CombineInfo combine_streams(std::istream& a, std::istream& b, std::ostream& out) {
  const ShareHeader ha = read_header(a);
  const ShareHeader hb = read_header(b);
  if (ha.scheme != hb.scheme)
    throw Error(Errc::SchemeMismatch, std::string(scheme_tag(ha.scheme)) + " vs " +
                                          scheme_tag(hb.scheme));
  if (ha.share_index == hb.share_index)
    throw Error(Errc::DuplicateIndex, "both inputs are share " + std::to_string(ha.share_index));
  if (ha.original_length != hb.original_length)
    throw Error(Errc::LengthMismatch, std::to_string(ha.original_length) + " vs " +
                                          std::to_string(hb.original_length) + " original bytes");

  const SchemeId scheme = ha.scheme;
  std::istream* lo = &a;
  std::istream* hi = &b;
  const ShareHeader* hlo = &ha;
  const ShareHeader* hhi = &hb;
  if (ha.share_index > hb.share_index) {
    std::swap(lo, hi);
    std::swap(hlo, hhi);
  }
  const PairId pair{hlo->share_index, hhi->share_index};

  const bool packed = scheme == SchemeId::XORC23;
  const size_t in_chunk = packed ? kChunkSize / 2 : kChunkSize;
  ChunkBuffer bufA(in_chunk);
  ChunkBuffer bufB(in_chunk);
  ChunkBuffer bufOut(kChunkSize);

  uint32_t crc_lo = 0, crc_hi = 0;
  uint64_t remaining = ha.payload_length();
  uint64_t produced = 0;
  while (remaining > 0) {
    const auto want = static_cast<size_t>(std::min<uint64_t>(remaining, in_chunk));
    read_payload_exact(*lo, bufA.data.data(), want, pair.lo);
    read_payload_exact(*hi, bufB.data.data(), want, pair.hi);
    crc_lo = crc32_ieee(crc_lo, {bufA.data.data(), want});
    crc_hi = crc32_ieee(crc_hi, {bufB.data.data(), want});

    size_t outn = 0;
    if (packed) {
      for (size_t i = 0; i < want; ++i) {
        const uint8_t nx = bufA.data[i], ny = bufB.data[i];
        bufOut.data[outn++] = xorc_recover(pair, nx >> 4, ny >> 4);
        if (produced + outn < ha.original_length)
          bufOut.data[outn++] = xorc_recover(pair, nx & 0x0F, ny & 0x0F);
      }
    } else {
      const RecoverTable& table = recover_table(scheme, pair);
      for (size_t i = 0; i < want; ++i) {
        const uint16_t v =
            table[static_cast<uint32_t>(bufA.data[i]) << 8 | bufB.data[i]];
        if (v == kInvalidEntry)
          throw Error(Errc::NonResidue, "share bytes no honest dealer can produce (pair " +
                                            std::to_string(pair.lo) + "," +
                                            std::to_string(pair.hi) + ")");
        bufOut.data[outn++] = static_cast<uint8_t>(v);
      }
    }
    write_all(out, bufOut.data.data(), outn, "reconstructed secret");
    produced += outn;
    remaining -= want;
  }

  // A share file is exactly header + payload.
  if (lo->peek() != std::istream::traits_type::eof() ||
      hi->peek() != std::istream::traits_type::eof())
    throw Error(Errc::LengthMismatch, "trailing bytes after share payload");

  if (crc_lo != hlo->payload_crc32)
    throw Error(Errc::CrcMismatch, "share " + std::to_string(pair.lo) + " payload is corrupted");
  if (crc_hi != hhi->payload_crc32)
    throw Error(Errc::CrcMismatch, "share " + std::to_string(pair.hi) + " payload is corrupted");

  out.flush();
  if (!out) throw Error(Errc::IoError, "flush failed on reconstructed secret");
  return {scheme, pair, ha.original_length};
}

std::vector<ShareHeader> split_to_files(std::istream& in, SchemeId scheme, const RngPolicy& rng,
                                        const std::vector<std::filesystem::path>& outputs) {
  std::vector<std::ofstream> files;
  std::vector<std::ostream*> outs;
  files.reserve(outputs.size());
  for (const auto& p : outputs) {
    auto& f = files.emplace_back(p, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::IoError, "cannot create " + p.string());
    outs.push_back(&f);
  }
  return split_stream(in, scheme, rng, outs);
}

std::vector<ShareHeader> split_file(const std::filesystem::path& input, SchemeId scheme,
                                    const RngPolicy& rng,
                                    const std::vector<std::filesystem::path>& outputs) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + input.string());
  return split_to_files(in, scheme, rng, outputs);
}

CombineInfo combine_files(const std::filesystem::path& a, const std::filesystem::path& b,
                          const std::filesystem::path& out) {
  std::ifstream fa(a, std::ios::binary);
  if (!fa) throw Error(Errc::IoError, "cannot open " + a.string());
  std::ifstream fb(b, std::ios::binary);
  if (!fb) throw Error(Errc::IoError, "cannot open " + b.string());
  std::ofstream fo(out, std::ios::binary | std::ios::trunc);
  if (!fo) throw Error(Errc::IoError, "cannot create " + out.string());

  try {
    return combine_streams(fa, fb, fo);
  } catch (...) {
    fo.close();
    std::error_code ec;
    std::filesystem::remove(out, ec);
    throw;
  }
}

}  // namespace sss
