#include "sss/verify.hpp"

#include <array>
#include <functional>

#include "sss/schemes.hpp"
#include "sss/shamir.hpp"

namespace sss {

namespace {

struct SchemeShape {
  int n_shares;
  uint16_t draw_lo, draw_hi;
  std::vector<PairId> pairs;
};

SchemeShape shape_of(SchemeId scheme) {
  SchemeShape s;
  s.n_shares = share_count(scheme);
  switch (scheme) {
    case SchemeId::NT23: s.draw_lo = 1; s.draw_hi = 256; break;
    case SchemeId::NT24: s.draw_lo = 1; s.draw_hi = 128; break;
    case SchemeId::XORC23: s.draw_lo = 0; s.draw_hi = 0; break;
    default: s.draw_lo = 0; s.draw_hi = 255; break;
  }
  for (int i = 1; i <= s.n_shares; ++i)
    for (int j = i + 1; j <= s.n_shares; ++j) s.pairs.push_back({i, j});
  return s;
}

std::array<uint8_t, 4> share_tuple(SchemeId scheme, uint8_t secret, uint16_t draw) {
  std::array<uint8_t, 4> out{};
  switch (scheme) {
    case SchemeId::NT23: {
      const auto s = nt23_share(secret, draw);
      std::copy(s.begin(), s.end(), out.begin());
      break;
    }
    case SchemeId::NT24: {
      const auto s = nt24_share(secret, draw);
      std::copy(s.begin(), s.end(), out.begin());
      break;
    }
    case SchemeId::XORC23: {
      const auto s = xorc_share(secret);
      std::copy(s.begin(), s.end(), out.begin());
      break;
    }
    case SchemeId::XORI23: {
      const auto s = xori_share(secret, static_cast<uint8_t>(draw));
      std::copy(s.begin(), s.end(), out.begin());
      break;
    }
    case SchemeId::Shamir2x3:
    case SchemeId::Shamir2x4:
      for (int i = 1; i <= share_count(scheme); ++i)
        out[i - 1] = shamir2_share_byte(secret, static_cast<uint8_t>(draw), i);
      break;
  }
  return out;
}

uint8_t recover(SchemeId scheme, PairId pair, uint8_t x, uint8_t y) {
  switch (scheme) {
    case SchemeId::NT23: return nt23_recover(pair, x, y);
    case SchemeId::NT24: return nt24_recover(pair, x, y);
    case SchemeId::XORC23: return xorc_recover(pair, x, y);
    case SchemeId::XORI23: return xori_recover(pair, x, y);
    default: return shamir2_recover_byte(pair, x, y);
  }
}

}  // namespace

std::vector<ShareCensus> expected_census(SchemeId scheme) {
  auto uniform = [](int n_shares, int distinct, int multiplicity) {
    std::vector<ShareCensus> c;
    for (int i = 1; i <= n_shares; ++i) c.push_back({i, distinct, {{multiplicity, distinct}}});
    return c;
  };
  switch (scheme) {
    case SchemeId::NT23:
      // Share 1 is a permutation of the draw; shares 2 and 3 range over the
      // squares and fourth powers, so they repeat 2x and 4x.
      return {{1, 256, {{1, 256}}}, {2, 128, {{2, 128}}}, {3, 64, {{4, 64}}}};
    case SchemeId::NT24: return uniform(4, 128, 1);
    case SchemeId::XORI23: return uniform(3, 256, 1);
    case SchemeId::Shamir2x3: return uniform(3, 256, 1);
    case SchemeId::Shamir2x4: return uniform(4, 256, 1);
    case SchemeId::XORC23: return {};
  }
  return {};
}

VerifyReport verify_exhaustive(SchemeId scheme) {
  const SchemeShape shape = shape_of(scheme);
  const auto expect = expected_census(scheme);
  const bool deterministic = scheme == SchemeId::XORC23;

  VerifyReport report;
  report.scheme = scheme;

  std::vector<std::array<uint32_t, 256>> counts(static_cast<size_t>(shape.n_shares));
  for (int secret = 0; secret < 256; ++secret) {
    const auto s = static_cast<uint8_t>(secret);
    for (auto& c : counts) c.fill(0);

    for (uint32_t draw = shape.draw_lo; draw <= shape.draw_hi; ++draw) {
      const auto shares = share_tuple(scheme, s, static_cast<uint16_t>(draw));
      for (int k = 0; k < shape.n_shares; ++k) ++counts[static_cast<size_t>(k)][shares[k]];
      for (const PairId pair : shape.pairs) {
        ++report.cases_run;
        if (recover(scheme, pair, shares[pair.lo - 1], shares[pair.hi - 1]) != s)
          ++report.failures;
      }
    }

    if (deterministic) continue;
    // The census over all draws must match the closed form for this secret.
    std::vector<ShareCensus> census;
    for (int k = 0; k < shape.n_shares; ++k) {
      ShareCensus c;
      c.share_index = k + 1;
      for (uint32_t v = 0; v < 256; ++v) {
        const auto mult = counts[static_cast<size_t>(k)][v];
        if (mult == 0) continue;
        ++c.distinct_values;
        ++c.multiplicity_histogram[static_cast<int>(mult)];
      }
      census.push_back(std::move(c));
    }
    if (census != expect) ++report.failures;
    if (secret == 0) report.census = std::move(census);
  }
  return report;
}

}  // namespace sss
