#pragma once

#include <cstdint>
#include <random>

namespace gridgames {

using Rng = std::mt19937_64;

/// Uniform draw from [0, n) by rejection. The engine is fully specified by the
/// standard; the std distributions are not, so seeded runs stay identical
/// across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace gridgames
