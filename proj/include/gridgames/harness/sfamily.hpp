#pragma once

#include <cstdint>
#include <vector>

namespace gridgames::harness {

/// The pair (n, n+c).
struct SPair {
  std::int64_t n = 0;
  std::int64_t c = 0;
  std::int64_t second() const { return n + c; }
  friend bool operator==(const SPair&, const SPair&) = default;
};

struct SFamily {
  std::int64_t d = 1;
  std::vector<SPair> pairs;
};

/// Term i of 0, 0,1, 0,1,2, 0,1,2,3, ...
std::int64_t c_sequence(std::int64_t index);

/// Greedy: for each c in the sequence, the smallest n >= 0 such that both
/// n and n+c differ by at least d from both components of every earlier pair.
SFamily build_s_family(std::int64_t d, std::int64_t count);

/// Smallest of the four cross-differences over all pairs of distinct
/// members; -1 for fewer than two pairs.
std::int64_t min_cross_difference(const SFamily& family);

}  // namespace gridgames::harness
