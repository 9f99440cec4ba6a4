#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sss/scheme.hpp"

namespace sss {

// Value distribution of one share over every admissible random draw, for a
// fixed secret. A testable surrogate for the schemes' secrecy behaviour:
// uniform single-draw censuses mean a lone share follows a distribution
// independent of the secret.
struct ShareCensus {
  int share_index = 0;
  int distinct_values = 0;
  std::map<int, int> multiplicity_histogram;  // multiplicity -> #values

  bool operator==(const ShareCensus&) const = default;
};

struct VerifyReport {
  SchemeId scheme = SchemeId::NT23;
  uint64_t cases_run = 0;
  uint64_t failures = 0;
  std::vector<ShareCensus> census;  // empty for the draw-free xorc23
};

// The closed-form census every secret must reproduce (empty for xorc23).
std::vector<ShareCensus> expected_census(SchemeId scheme);

// Enumerates every (secret, draw, pair) tuple of the scheme, checks each
// recovery returns the secret, and checks the per-secret share census
// against the closed form. Failures are counted, never thrown.
VerifyReport verify_exhaustive(SchemeId scheme);

}  // namespace sss
