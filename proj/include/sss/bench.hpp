#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sss/rng.hpp"
#include "sss/scheme.hpp"

namespace sss {

struct BenchReport {
  SchemeId scheme = SchemeId::NT23;
  std::string direction;  // "split" or "combine"
  uint64_t bytes = 0;
  double seconds = 0.0;
  double bytes_per_second = 0.0;
};

// Times split and combine over synthetic random input held in memory.
// Reports numbers only; nothing is asserted about absolute speed.
// Requires size_bytes >= 1 MiB.
std::vector<BenchReport> run_bench(SchemeId scheme, uint64_t size_bytes, const RngPolicy& rng);

}  // namespace sss
