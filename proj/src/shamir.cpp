#include "sss/shamir.hpp"

#include "sss/errors.hpp"
#include "sss/gf256.hpp"

namespace sss {

std::vector<SharePoint> shamir_split(uint8_t secret, int threshold, int n_shares,
                                     std::span<const uint8_t> coeffs) {
  if (threshold < 2 || n_shares < threshold || n_shares > 255)
    throw Error(Errc::BadParams, "need 2 <= t <= n <= 255");
  if (static_cast<int>(coeffs.size()) != threshold - 1)
    throw Error(Errc::BadParams, "expected t - 1 coefficients");

  std::vector<SharePoint> shares;
  shares.reserve(static_cast<size_t>(n_shares));
  for (int i = 1; i <= n_shares; ++i) {
    const auto xi = static_cast<uint8_t>(i);
    // Horner from the top coefficient down to the constant term (the secret).
    uint8_t y = 0;
    for (int k = threshold - 2; k >= 0; --k) y = static_cast<uint8_t>(gf256::mul(y, xi) ^ coeffs[k]);
    y = static_cast<uint8_t>(gf256::mul(y, xi) ^ secret);
    shares.push_back({xi, y});
  }
  return shares;
}

uint8_t shamir_combine(std::span<const SharePoint> points) {
  if (points.size() < 2) throw Error(Errc::BadParams, "need at least two points");
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].x == 0) throw Error(Errc::BadParams, "evaluation index 0 is reserved for the secret");
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].x == points[j].x)
        throw Error(Errc::DuplicateX, "repeated evaluation index " + std::to_string(points[i].x));
  }

  uint8_t acc = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    uint8_t num = 1, den = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      num = gf256::mul(num, points[j].x);
      den = gf256::mul(den, static_cast<uint8_t>(points[i].x ^ points[j].x));
    }
    acc = static_cast<uint8_t>(acc ^ gf256::mul(points[i].y, gf256::div(num, den)));
  }
  return acc;
}

uint8_t shamir2_share_byte(uint8_t secret, uint8_t coeff, int index) {
  return static_cast<uint8_t>(secret ^ gf256::mul(coeff, static_cast<uint8_t>(index)));
}

uint8_t shamir2_recover_byte(PairId pair, uint8_t x, uint8_t y) {
  if (pair.lo < 1 || pair.lo >= pair.hi || pair.hi > 255)
    throw Error(Errc::InvalidPair, "need 1 <= lo < hi <= 255");
  const auto xi = static_cast<uint8_t>(pair.lo);
  const auto xj = static_cast<uint8_t>(pair.hi);
  const uint8_t d = gf256::inv(static_cast<uint8_t>(xi ^ xj));
  return static_cast<uint8_t>(gf256::mul(x, gf256::mul(xj, d)) ^ gf256::mul(y, gf256::mul(xi, d)));
}

}  // namespace sss
