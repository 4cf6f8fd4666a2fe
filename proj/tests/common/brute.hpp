#pragma once

// Brute-force oracles independent of the library's search path. They use
// plain fixed-width integer arithmetic and their own square check so the
// engine and the oracle cannot share a bug.

#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

namespace brute {

inline bool is_square_u128(unsigned __int128 v, std::uint64_t* root = nullptr) {
  if (v == 0) {
    if (root) *root = 0;
    return true;
  }
  // Binary-search the root; slow and simple on purpose.
  unsigned __int128 lo = 0, hi = 1;
  while (hi * hi < v) hi <<= 1;
  while (lo < hi) {
    const unsigned __int128 mid = (lo + hi) / 2;
    if (mid * mid < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo * lo != v) return false;
  if (root) *root = static_cast<std::uint64_t>(lo);
  return true;
}

struct Triple {
  std::uint64_t x, y, z;
  bool operator==(const Triple&) const = default;
};

// All solutions of z^2 = a*x^4 + b*x^2y^2 + c*y^4 over the closed box.
inline std::vector<Triple> search(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::uint32_t bound, bool coprime_only = true,
                                  bool exclude_trivial = true) {
  std::vector<Triple> out;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    for (std::uint64_t y = 1; y <= bound; ++y) {
      if (coprime_only && std::gcd(x, y) != 1) continue;
      const __int128 x2 = static_cast<__int128>(x) * x;
      const __int128 y2 = static_cast<__int128>(y) * y;
      const __int128 v = a * x2 * x2 + b * x2 * y2 + c * y2 * y2;
      if (v < 0) continue;
      std::uint64_t z = 0;
      if (!is_square_u128(static_cast<unsigned __int128>(v), &z)) continue;
      if (exclude_trivial && z == 0) continue;
      out.push_back(Triple{x, y, z});
    }
  }
  return out;
}

inline std::uint64_t coprime_pairs(std::uint32_t bound) {
  std::uint64_t n = 0;
  for (std::uint64_t x = 1; x <= bound; ++x)
    for (std::uint64_t y = 1; y <= bound; ++y)
      if (std::gcd(x, y) == 1) ++n;
  return n;
}

}  // namespace brute
