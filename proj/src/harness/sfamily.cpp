#include "gridgames/harness/sfamily.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gridgames::harness {

std::int64_t c_sequence(std::int64_t index) {
  if (index < 0) throw std::invalid_argument("negative index");
  std::int64_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= index) ++k;
  return index - k * (k + 1) / 2;
}

namespace {

std::int64_t cross(const SPair& a, const SPair& b) {
  return std::min({std::llabs(a.n - b.n), std::llabs(a.n - b.second()), std::llabs(a.second() - b.n),
                   std::llabs(a.second() - b.second())});
}

}  // namespace

SFamily build_s_family(std::int64_t d, std::int64_t count) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (count < 0) throw std::invalid_argument("count must be non-negative");
  SFamily family;
  family.d = d;
  for (std::int64_t i = 0; i < count; ++i) {
    SPair next{0, c_sequence(i)};
    while (std::any_of(family.pairs.begin(), family.pairs.end(),
                       [&](const SPair& q) { return cross(next, q) < d; })) {
      ++next.n;
    }
    family.pairs.push_back(next);
  }
  return family;
}

std::int64_t min_cross_difference(const SFamily& family) {
  std::int64_t best = -1;
  for (std::size_t i = 0; i < family.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < family.pairs.size(); ++j) {
      const std::int64_t v = cross(family.pairs[i], family.pairs[j]);
      if (best < 0 || v < best) best = v;
    }
  }
  return best;
}

}  // namespace gridgames::harness
