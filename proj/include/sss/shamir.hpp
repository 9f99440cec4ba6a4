#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sss/scheme.hpp"

namespace sss {

// One evaluation point of the sharing polynomial over GF(256): y = P(x).
struct SharePoint {
  uint8_t x = 0;  // evaluation index, nonzero
  uint8_t y = 0;

  bool operator==(const SharePoint&) const = default;
};

// Splits one secret byte with a degree t-1 polynomial P, P(0) = secret.
// The caller supplies the t-1 random coefficients; shares are (i, P(i))
// for i = 1..n.
std::vector<SharePoint> shamir_split(uint8_t secret, int threshold, int n_shares,
                                     std::span<const uint8_t> coeffs);

// Lagrange interpolation at x = 0 through all given points.
uint8_t shamir_combine(std::span<const SharePoint> points);

// t = 2 byte kernels used by the streaming engine. They agree with
// shamir_split/shamir_combine on every input (tested exhaustively).
uint8_t shamir2_share_byte(uint8_t secret, uint8_t coeff, int index);
uint8_t shamir2_recover_byte(PairId pair, uint8_t x, uint8_t y);

}  // namespace sss
