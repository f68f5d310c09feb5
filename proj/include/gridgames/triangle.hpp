#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>

#include "gridgames/cell.hpp"

namespace gridgames::rab {

/// A subset of the triangle T_n = {(i,j) | i+j <= n}, stored by antidiagonal:
/// bit x of layer k is the cell (x, k-x).
class TriangleSet {
 public:
  static constexpr int kMaxBound = 62;

  TriangleSet() = default;
  explicit TriangleSet(int bound);
  /// Cells with coordinate sum above `bound` are dropped.
  TriangleSet(int bound, const CellSet& cells);

  /// The full triangle T_bound.
  static TriangleSet full(int bound);

  int bound() const { return bound_; }
  std::uint64_t layer(int k) const { return k >= 0 && k <= bound_ ? layers_[static_cast<std::size_t>(k)] : 0; }
  void set_layer(int k, std::uint64_t bits);

  bool contains(Cell c) const;
  void insert(Cell c);
  void erase(Cell c);
  int size() const;
  bool empty() const { return size() == 0; }
  /// Largest k with a non-empty layer, or -1.
  int max_layer() const;

  /// Same cells restricted to sums <= n, with bound n.
  TriangleSet clipped(int n) const;
  CellSet cells() const;

  friend bool operator==(const TriangleSet& a, const TriangleSet& b) {
    for (int k = 0; k <= kMaxBound; ++k) {
      if (a.layer(k) != b.layer(k)) return false;
    }
    return true;
  }

 private:
  int bound_ = -1;
  std::array<std::uint64_t, kMaxBound + 1> layers_{};
};

/// Number of cells of T_n(vertex); zero when the vertex lies outside T_n.
std::int64_t triangle_size(Cell vertex, std::int64_t n);

/// Cells c of R with T_n(c) contained in R.
TriangleSet full_cells(const TriangleSet& red);

/// Smallest vertex (k,l) with T_n(k,l) non-empty and contained in R.
std::optional<Cell> contains_triangle(const CellSet& red, int n);
std::optional<Cell> contains_triangle(const TriangleSet& red);

enum class ReductionCase { NoTriangle, Triangle };

struct ReductionResult {
  ReductionCase kind = ReductionCase::NoTriangle;
  CellSet r_prime;
  CellSet pink;     // triangle case only
  CellSet removed;  // no-triangle case only
};

/// Drops the cells of R with maximal coordinate sum. Throws PreconditionError
/// if R contains a triangle T_n(k,l).
ReductionResult reduce_no_triangle(const CellSet& red, int n);

/// Keeps the cells of R with sum <= reachable_bound and adds the pink cells:
/// cells outside R with sum <= reachable_bound that have a neighbour (right or
/// up) inside a triangle T_n(k,l) contained in R. Throws PreconditionError if
/// R contains no such triangle.
ReductionResult reduce_triangle(const CellSet& red, int n, int reachable_bound);

/// Pink cells of R on board n (sum <= n-2).
TriangleSet pink_cells(const TriangleSet& red);

/// The set used by the smaller game: triangle or no-triangle reduction of R
/// (board red.bound()), returned with bound red.bound() - 2.
TriangleSet reduce(const TriangleSet& red, ReductionCase* kind = nullptr);

/// {(0,0)} together with R shifted by (1,1).
CellSet lift(const CellSet& red);

}  // namespace gridgames::rab
