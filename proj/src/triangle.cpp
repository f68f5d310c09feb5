#include "gridgames/triangle.hpp"

#include <stdexcept>

#include "gridgames/errors.hpp"

namespace gridgames::rab {

namespace {

constexpr std::uint64_t layer_mask(int k) { return k >= 63 ? ~0ULL : (1ULL << (k + 1)) - 1; }

}  // namespace

TriangleSet::TriangleSet(int bound) : bound_(bound) {
  if (bound > kMaxBound) throw std::invalid_argument("triangle bound " + std::to_string(bound) + " is too large");
}

TriangleSet::TriangleSet(int bound, const CellSet& cells) : TriangleSet(bound) {
  for (const Cell& c : cells) {
    if (c.valid() && c.sum() <= bound_) insert(c);
  }
}

TriangleSet TriangleSet::full(int bound) {
  TriangleSet t(bound);
  for (int k = 0; k <= bound; ++k) t.layers_[static_cast<std::size_t>(k)] = layer_mask(k);
  return t;
}

void TriangleSet::set_layer(int k, std::uint64_t bits) {
  if (k < 0 || k > bound_) throw std::out_of_range("layer outside the triangle");
  layers_[static_cast<std::size_t>(k)] = bits & layer_mask(k);
}

bool TriangleSet::contains(Cell c) const {
  if (!c.valid() || c.sum() > bound_) return false;
  return (layers_[static_cast<std::size_t>(c.sum())] >> c.x) & 1ULL;
}

void TriangleSet::insert(Cell c) {
  if (!c.valid() || c.sum() > bound_) throw std::out_of_range("cell " + to_string(c) + " lies outside T_" + std::to_string(bound_));
  layers_[static_cast<std::size_t>(c.sum())] |= 1ULL << c.x;
}

void TriangleSet::erase(Cell c) {
  if (!c.valid() || c.sum() > bound_) return;
  layers_[static_cast<std::size_t>(c.sum())] &= ~(1ULL << c.x);
}

int TriangleSet::size() const {
  int s = 0;
  for (int k = 0; k <= bound_; ++k) s += std::popcount(layers_[static_cast<std::size_t>(k)]);
  return s;
}

int TriangleSet::max_layer() const {
  for (int k = bound_; k >= 0; --k) {
    if (layers_[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

TriangleSet TriangleSet::clipped(int n) const {
  TriangleSet t(n);
  for (int k = 0; k <= n && k <= bound_; ++k) t.layers_[static_cast<std::size_t>(k)] = layers_[static_cast<std::size_t>(k)];
  return t;
}

CellSet TriangleSet::cells() const {
  CellSet out;
  for (int k = 0; k <= bound_; ++k) {
    std::uint64_t bits = layers_[static_cast<std::size_t>(k)];
    while (bits != 0) {
      const int x = std::countr_zero(bits);
      bits &= bits - 1;
      out.insert(Cell{x, k - x});
    }
  }
  return out;
}

std::int64_t triangle_size(Cell vertex, std::int64_t n) {
  const std::int64_t m = n - vertex.sum();
  if (m < 0) return 0;
  return (m + 1) * (m + 2) / 2;
}

TriangleSet full_cells(const TriangleSet& red) {
  const int n = red.bound();
  TriangleSet f(n);
  if (n < 0) return f;
  f.set_layer(n, red.layer(n));
  for (int k = n - 1; k >= 0; --k) {
    const std::uint64_t up = f.layer(k + 1);
    f.set_layer(k, red.layer(k) & up & (up >> 1));
  }
  return f;
}

std::optional<Cell> contains_triangle(const TriangleSet& red) {
  const TriangleSet f = full_cells(red);
  for (int x = 0; x <= red.bound(); ++x) {
    for (int y = 0; x + y <= red.bound(); ++y) {
      if (f.contains(Cell{x, y})) return Cell{x, y};
    }
  }
  return std::nullopt;
}

std::optional<Cell> contains_triangle(const CellSet& red, int n) {
  if (n < 0) return std::nullopt;
  return contains_triangle(TriangleSet(n, red));
}

namespace {

TriangleSet pink_up_to(const TriangleSet& red, int reachable_bound) {
  const int n = red.bound();
  const TriangleSet f = full_cells(red);
  TriangleSet pink(n);
  for (int k = 0; k <= reachable_bound && k + 1 <= n; ++k) {
    const std::uint64_t up = f.layer(k + 1);
    pink.set_layer(k, ~red.layer(k) & (up | (up >> 1)));
  }
  return pink;
}

}  // namespace

TriangleSet pink_cells(const TriangleSet& red) { return pink_up_to(red, red.bound() - 2); }

ReductionResult reduce_no_triangle(const CellSet& red, int n) {
  if (contains_triangle(red, n)) throw PreconditionError("reduce_no_triangle: R contains a triangle");
  ReductionResult res;
  res.kind = ReductionCase::NoTriangle;
  std::int64_t best = -1;
  for (const Cell& c : red) best = std::max(best, c.sum());
  for (const Cell& c : red) (c.sum() == best ? res.removed : res.r_prime).insert(c);
  return res;
}

ReductionResult reduce_triangle(const CellSet& red, int n, int reachable_bound) {
  const TriangleSet t(n, red);
  if (!contains_triangle(t)) throw PreconditionError("reduce_triangle: R contains no triangle");
  ReductionResult res;
  res.kind = ReductionCase::Triangle;
  res.pink = pink_up_to(t, reachable_bound).cells();
  for (const Cell& c : red) {
    if (c.sum() <= reachable_bound) res.r_prime.insert(c);
  }
  res.r_prime.insert(res.pink.begin(), res.pink.end());
  return res;
}

TriangleSet reduce(const TriangleSet& red, ReductionCase* kind) {
  const int n = red.bound();
  TriangleSet out = red.clipped(n - 2);
  if (n >= 0 && red.layer(n) != 0) {
    if (kind) *kind = ReductionCase::Triangle;
    const TriangleSet pink = pink_cells(red);
    for (int k = 0; k <= n - 2; ++k) out.set_layer(k, out.layer(k) | pink.layer(k));
    return out;
  }
  if (kind) *kind = ReductionCase::NoTriangle;
  const int top = red.max_layer();
  if (top >= 0 && top <= n - 2) out.set_layer(top, 0);
  return out;
}

CellSet lift(const CellSet& red) {
  CellSet out{Cell{0, 0}};
  for (const Cell& c : red) out.insert(Cell{c.x + 1, c.y + 1});
  return out;
}

}  // namespace gridgames::rab
