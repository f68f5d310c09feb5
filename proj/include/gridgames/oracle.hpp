#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridgames/rab_game.hpp"
#include "gridgames/triangle.hpp"

namespace gridgames::oracle {

/// Perfect-play winner of the (r,a,b)-game once Alice has fixed R. Layered
/// bitset evaluation over T_{a+b}; the remaining budget of the player not
/// tracked is implied by the layer.
Player solve_fixed_R(const CellSet& red, std::int64_t a, std::int64_t b);
/// Same, for a red set given on the board T_{a+b}.
bool alice_wins_fixed(const rab::TriangleSet& red, int a, int b);

/// Independent route: memoized recursion over (token, a_left, b_left).
Player solve_fixed_R_reference(const CellSet& red, std::int64_t a, std::int64_t b);

struct SolveOptions {
  /// Maximum number of red sets solve_rab may examine.
  std::uint64_t cap = 300'000'000;
  /// Worker threads; 0 resolves through resolve_jobs().
  int jobs = 1;
};

struct RabSolution {
  Player winner = Player::Bob;
  /// Alice's first winning red set in enumeration order, if she wins.
  std::optional<CellSet> witness;
  std::uint64_t examined = 0;
};

/// Number of red sets of size <= min(r, |T_{a+b}|) inside T_{a+b}.
std::uint64_t red_set_count(std::int64_t r, std::int64_t a, std::int64_t b);

/// Exhaustive solve over all red sets R inside T_{a+b} with |R| <= r, largest
/// sizes first, colexicographic within a size, stopping at the first Alice
/// win. Throws CapExceeded when red_set_count exceeds options.cap.
RabSolution solve_rab(std::int64_t r, std::int64_t a, std::int64_t b, const SolveOptions& options = {});

struct Thm7Entry {
  std::int64_t r = 0, a = 0, b = 0;
  Player predicted = Player::Bob;
  Player solved = Player::Bob;
  std::optional<CellSet> witness;
};

struct Thm7Report {
  std::int64_t max_sum = 0;
  std::int64_t max_r = 0;
  std::vector<Thm7Entry> entries;  // ordered by (a+b, a, r)
  std::int64_t mismatches = 0;
};

/// Compares solve_rab with the winner predicate for every a+b <= max_sum and
/// r <= max_r. Triples are distributed over options.jobs workers.
Thm7Report verify_theorem7(std::int64_t max_sum, std::int64_t max_r, const SolveOptions& options = {});

/// One record per triple plus a closing summary record.
std::string thm7_to_jsonl(const Thm7Report& report);

/// Enumerates every red set of size <= r inside T_{a+b}, in the same order as
/// solve_rab. fn returns false to stop early.
void for_each_red_set(std::int64_t r, std::int64_t a, std::int64_t b,
                      const std::function<bool(const rab::TriangleSet&)>& fn);

struct StrategyCheck {
  std::uint64_t red_sets = 0;
  std::uint64_t losses = 0;
  std::optional<CellSet> counterexample;
};

/// True iff `bob` wins from the opening R against every line of Alice play.
/// The strategy is queried as a function of the position.
bool bob_strategy_wins(const RabGameConfig& config, RabStrategy& bob, const CellSet& red);

/// Runs bob_strategy_wins over every red set Alice may choose.
StrategyCheck check_bob_strategy(const RabGameConfig& config, const RabStrategy& bob);

/// True iff `alice` wins against every line of Bob play.
bool alice_strategy_wins(const RabGameConfig& config, RabStrategy& alice);

}  // namespace gridgames::oracle
