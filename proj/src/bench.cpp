#include "sss/bench.hpp"

#include <chrono>

#include "sss/engine.hpp"
#include "sss/errors.hpp"
#include "sss/schemes.hpp"
#include "sss/streams.hpp"

namespace sss {

std::vector<BenchReport> run_bench(SchemeId scheme, uint64_t size_bytes, const RngPolicy& rng) {
  if (size_bytes < 1 << 20) throw Error(Errc::BadParams, "bench needs at least 1 MiB");

  std::vector<uint8_t> input(size_bytes);
  ChunkRng gen = make_chunk_rng(RngPolicy::seeded(0x5EEDBE9C), scheme, 0);
  for (auto& b : input) b = gen.next_byte();

  using clock = std::chrono::steady_clock;
  std::vector<BenchReport> reports;

  // Split: keep shares 1 and 2 for the combine leg, discard the rest.
  std::vector<uint8_t> share1, share2;
  double split_seconds;
  {
    SpanSource in(input);
    VectorSink s1(share1), s2(share2);
    NullSink rest1, rest2;
    std::vector<std::ostream*> outs{&s1, &s2};
    if (share_count(scheme) >= 3) outs.push_back(&rest1);
    if (share_count(scheme) >= 4) outs.push_back(&rest2);
    const auto t0 = clock::now();
    split_stream(in, scheme, rng, outs);
    split_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  }
  reports.push_back({scheme, "split", size_bytes, split_seconds,
                     static_cast<double>(size_bytes) / split_seconds});

  {
    SpanSource a(share1), b(share2);
    NullSink out;
    const auto t0 = clock::now();
    combine_streams(a, b, out);
    const auto seconds = std::chrono::duration<double>(clock::now() - t0).count();
    reports.push_back(
        {scheme, "combine", size_bytes, seconds, static_cast<double>(size_bytes) / seconds});
  }
  return reports;
}

}  // namespace sss
