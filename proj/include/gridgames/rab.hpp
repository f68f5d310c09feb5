#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gridgames/rab_game.hpp"
#include "gridgames/triangle.hpp"

namespace gridgames::rab {

/// Bob iff b >= r, or b >= a and (b-a+1)(b-a+2)/2 > r-a.
Player rab_winner_predicate(std::int64_t r, std::int64_t a, std::int64_t b);

/// Bob's strategy from the induction on a, unrolled for one red set R.
///
/// Level k is the mental (r-k, a-k, b-k)-game on T_{a+b-2k} with red set
/// red_k, where red_0 = R and red_{k+1} is the reduction of red_k. A decision
/// at level k relays to level k+1 unless Alice is out of moves at level k
/// (walk to the nearest white cell) or the token sits on a cell removed in
/// the no-triangle case (step off it).
class RecursiveBobPlan {
 public:
  RecursiveBobPlan(const RabGameConfig& config, const CellSet& red);
  RecursiveBobPlan(const RabGameConfig& config, const TriangleSet& red);

  /// Bob's shift with the token on a red cell and the given remaining budgets.
  Shift decide(Cell token, std::int64_t a_left, std::int64_t b_left) const;

  std::size_t levels() const { return levels_.size(); }
  const TriangleSet& level_red(std::size_t k) const { return levels_.at(k).red; }
  ReductionCase level_case(std::size_t k) const { return levels_.at(k).next_case; }

 private:
  struct Level {
    TriangleSet red;
    ReductionCase next_case = ReductionCase::NoTriangle;
  };

  void build(const RabGameConfig& config, const TriangleSet& red);
  Shift decide_level(std::size_t k, Cell token, std::int64_t a_left, std::int64_t b_left) const;
  Shift walk(std::size_t k, Cell token, std::int64_t b_left) const;

  bool always_up_ = false;
  std::vector<Level> levels_;
};

// Strategy factories. With `check` set, a parameter triple outside the
// strategy's domain raises PreconditionError.
std::unique_ptr<RabStrategy> bob_always_up(const RabGameConfig& config, bool check = true);
std::unique_ptr<RabStrategy> bob_recursive(const RabGameConfig& config, bool check = true);
std::unique_ptr<RabStrategy> alice_diagonal(const RabGameConfig& config, bool check = true);
std::unique_ptr<RabStrategy> alice_basis_triangle(const RabGameConfig& config, bool check = true);
std::unique_ptr<RabStrategy> alice_kite(const RabGameConfig& config, bool check = true);

/// Seeded random play; Alice picks a random red set of at most r cells of T_{a+b}.
std::unique_ptr<RabStrategy> rab_random(Player side, std::uint64_t seed);

/// The kite: diagonal tail (i,i) for i < t and a full triangle with vertex
/// (t,t), t = min(a,b), of the largest height that fits into the remaining
/// r - t cells.
CellSet kite_cells(const RabGameConfig& config);

/// Names accepted by make_rab_strategy.
std::vector<std::string> rab_strategy_names(Player side);

/// "always-up", "recursive", "random[:seed]" for Bob; "diagonal", "basis",
/// "kite", "random[:seed]" for Alice. With check = false the named strategy
/// is built even where its precondition fails.
std::unique_ptr<RabStrategy> make_rab_strategy(const std::string& name, Player side, const RabGameConfig& config,
                                               bool check = true);

}  // namespace gridgames::rab
