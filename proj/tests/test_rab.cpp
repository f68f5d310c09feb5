#include <functional>

#include "doctest.h"
#include "gridgames/errors.hpp"
#include "gridgames/oracle.hpp"
#include "gridgames/rab.hpp"
#include "gridgames/triangle.hpp"

using namespace gridgames;
using namespace gridgames::rab;

namespace {

std::vector<Cell> board(std::int64_t n) {
  std::vector<Cell> out;
  for (std::int64_t s = 0; s <= n; ++s) {
    for (std::int64_t x = 0; x <= s; ++x) out.push_back({x, s - x});
  }
  return out;
}

CellSet subset(const std::vector<Cell>& cells, std::uint64_t mask) {
  CellSet out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (mask >> i & 1) out.insert(cells[i]);
  }
  return out;
}

// Plain minimax without memoization.
bool naive_alice_wins(const CellSet& red, Cell t, std::int64_t a, std::int64_t b) {
  const bool bob = red.contains(t);
  if ((bob ? b : a) == 0) return bob;
  const Cell up{t.x, t.y + 1}, right{t.x + 1, t.y};
  if (bob) return naive_alice_wins(red, up, a, b - 1) && naive_alice_wins(red, right, a, b - 1);
  return naive_alice_wins(red, up, a - 1, b) || naive_alice_wins(red, right, a - 1, b);
}

Player naive_solve(std::int64_t r, std::int64_t a, std::int64_t b) {
  const auto cells = board(a + b);
  for (std::uint64_t m = 0; m < (1ULL << cells.size()); ++m) {
    if (std::popcount(m) > r) continue;
    if (naive_alice_wins(subset(cells, m), {0, 0}, a, b)) return Player::Alice;
  }
  return Player::Bob;
}

// Exhaustive play of a strategy against every line of the other side; the
// strategy is cloned at every branch so it may keep private state.
bool strategy_wins(const RabStrategy& s, Player side, const RabGameState& state, const RabGameConfig& c) {
  if (state.finished) return state.loser != side;
  if (state.mover() == side) {
    auto next = s.clone();
    const Shift m = next->move(c, state);
    if (m == Shift::Diagonal || rab_mover_stuck(state)) return false;
    return strategy_wins(*next, side, rab_step(state, m), c);
  }
  for (Shift m : {Shift::Up, Shift::Right}) {
    if (!strategy_wins(s, side, rab_step(state, m), c)) return false;
  }
  return true;
}

bool bob_wins_everywhere(const RabGameConfig& c, const RabStrategy& bob) {
  const auto cells = board(c.a + c.b);
  for (std::uint64_t m = 0; m < (1ULL << cells.size()); ++m) {
    if (std::popcount(m) > c.r) continue;
    if (!strategy_wins(bob, Player::Bob, rab_new_game(c, subset(cells, m)), c)) return false;
  }
  return true;
}

bool alice_wins_everywhere(const RabGameConfig& c, RabStrategy& alice) {
  const CellSet red = alice.choose_red(c);
  return strategy_wins(alice, Player::Alice, rab_new_game(c, red), c);
}

}  // namespace

TEST_CASE("winner predicate") {
  CHECK(rab_winner_predicate(8, 2, 4) == Player::Alice);
  CHECK(rab_winner_predicate(0, 5, 0) == Player::Bob);
  CHECK(rab_winner_predicate(3, 0, 1) == Player::Alice);
  CHECK(rab_winner_predicate(2, 0, 1) == Player::Bob);
  CHECK(rab_winner_predicate(3, 1, 2) == Player::Bob);
  for (std::int64_t r = 0; r <= 40; ++r) {
    for (std::int64_t a = 0; a <= 12; ++a) {
      for (std::int64_t b = 0; b <= 12; ++b) {
        if (rab_winner_predicate(r, a, b) == Player::Bob) CHECK(rab_winner_predicate(r, a, b + 1) == Player::Bob);
      }
    }
  }
}

TEST_CASE("winner predicate against plain minimax") {
  for (std::int64_t s = 0; s <= 3; ++s) {
    for (std::int64_t a = 0; a <= s; ++a) {
      for (std::int64_t r = 0; r <= 7; ++r) {
        CAPTURE(r);
        CAPTURE(a);
        CHECK(rab_winner_predicate(r, a, s - a) == naive_solve(r, a, s - a));
      }
    }
  }
}

TEST_CASE("triangle sets") {
  CHECK(triangle_size({0, 0}, 4) == 15);
  CHECK(triangle_size({2, 3}, 4) == 0);
  CHECK(triangle_size({2, 2}, 4) == 1);
  const TriangleSet t = TriangleSet::full(3);
  CHECK(t.size() == 10);
  CHECK(t.cells().size() == 10);
  CHECK(t.max_layer() == 3);
  CHECK(t.clipped(1).size() == 3);
  TriangleSet u(4, {{0, 0}, {1, 3}, {5, 5}});
  CHECK(u.size() == 2);
  CHECK(u.contains({1, 3}));
  u.erase({1, 3});
  CHECK_FALSE(u.contains({1, 3}));
  CHECK_THROWS(u.insert({3, 2}));
}

TEST_CASE("contains_triangle") {
  CHECK(contains_triangle(CellSet{{1, 1}, {2, 1}, {1, 2}}, 3) == Cell{1, 1});
  CHECK_FALSE(contains_triangle(CellSet{{1, 1}, {2, 0}}, 3).has_value());
  CHECK(contains_triangle(CellSet{{1, 1}, {2, 1}}, 3) == Cell{2, 1});
  CHECK(contains_triangle(TriangleSet::full(4).cells(), 4) == Cell{0, 0});
  CHECK(contains_triangle(CellSet{{2, 2}}, 4) == Cell{2, 2});

  // Against direct containment over every R inside T_4.
  const auto cells = board(4);
  for (std::uint64_t m = 0; m < (1ULL << cells.size()); ++m) {
    const CellSet red = subset(cells, m);
    std::optional<Cell> expect;
    for (Cell v : cells) {
      bool all = true;
      for (Cell c : cells) {
        if (dominates(c, v) && !red.contains(c)) all = false;
      }
      if (all && (!expect || v < *expect)) expect = v;
    }
    CHECK(contains_triangle(red, 4) == expect);
  }
}

TEST_CASE("no-triangle reduction") {
  const ReductionResult r = reduce_no_triangle({{0, 0}, {2, 1}, {1, 2}}, 5);
  CHECK(r.kind == ReductionCase::NoTriangle);
  CHECK(r.removed == CellSet{{2, 1}, {1, 2}});
  CHECK(r.r_prime == CellSet{{0, 0}});
  CHECK(reduce_no_triangle({}, 4).r_prime.empty());
  CHECK_THROWS_AS(reduce_no_triangle({{4, 0}}, 4), PreconditionError);
}

TEST_CASE("triangle reduction") {
  CHECK_THROWS_AS(reduce_triangle({{0, 0}}, 4, 2), PreconditionError);
  for (int n = 2; n <= 8; ++n) {
    const CellSet full = TriangleSet::full(n).cells();
    const ReductionResult r = reduce_triangle(full, n, n - 2);
    CHECK(r.kind == ReductionCase::Triangle);
    CHECK(r.pink.empty());
    CHECK(r.r_prime.size() < full.size());
  }
  const ReductionResult r = reduce_triangle({{1, 2}, {2, 2}, {1, 3}, {3, 0}}, 4, 2);
  CHECK(r.pink == CellSet{{1, 1}, {0, 2}});
  CHECK(r.r_prime == CellSet{{1, 1}, {0, 2}});

  // Pink cells against the definition, over every R inside T_4.
  const auto cells = board(4);
  for (std::uint64_t m = 0; m < (1ULL << cells.size()); ++m) {
    const CellSet red = subset(cells, m);
    if (!contains_triangle(red, 4)) continue;
    CellSet in_triangle;
    for (Cell v : cells) {
      bool all = true;
      for (Cell c : cells) {
        if (dominates(c, v) && !red.contains(c)) all = false;
      }
      if (!all) continue;
      for (Cell c : cells) {
        if (dominates(c, v)) in_triangle.insert(c);
      }
    }
    CellSet pink;
    for (Cell c : cells) {
      if (c.sum() <= 2 && !red.contains(c) &&
          (in_triangle.contains({c.x + 1, c.y}) || in_triangle.contains({c.x, c.y + 1}))) {
        pink.insert(c);
      }
    }
    const ReductionResult got = reduce_triangle(red, 4, 2);
    CHECK(got.pink == pink);
    CHECK(got.r_prime.size() < red.size());
  }
}

TEST_CASE("bitset reduction agrees with the set form on T_5") {
  const auto cells = board(5);
  for (std::uint64_t m = 0; m < (1ULL << cells.size()); m += 7) {
    const CellSet red = subset(cells, m);
    const TriangleSet t(5, red);
    ReductionCase kind;
    const TriangleSet got = reduce(t, &kind);
    if (contains_triangle(red, 5)) {
      REQUIRE(kind == ReductionCase::Triangle);
      const ReductionResult want = reduce_triangle(red, 5, 3);
      CHECK(got.cells() == want.r_prime);
      CHECK(pink_cells(t).cells() == want.pink);
    } else {
      REQUIRE(kind == ReductionCase::NoTriangle);
      CellSet want = reduce_no_triangle(red, 5).r_prime;
      std::erase_if(want, [](Cell c) { return c.sum() > 3; });
      CHECK(got.cells() == want);
    }
  }
}

TEST_CASE("lift") {
  CHECK(lift({{0, 0}, {2, 1}}) == CellSet{{0, 0}, {1, 1}, {3, 2}});
  // Alice's witness lifts to a win one size up.
  for (std::int64_t s = 0; s <= 3; ++s) {
    for (std::int64_t a = 0; a <= s; ++a) {
      for (std::int64_t r = 0; r <= 6; ++r) {
        const auto sol = oracle::solve_rab(r, a, s - a);
        if (sol.winner != Player::Alice) continue;
        CHECK(oracle::solve_fixed_R(lift(*sol.witness), a + 1, s - a + 1) == Player::Alice);
      }
    }
  }
}

TEST_CASE("kite cells") {
  CHECK(kite_cells({8, 2, 4}) == CellSet{{0, 0}, {1, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}});
  CHECK(kite_cells({6, 0, 2}) == TriangleSet::full(2).cells());
  CHECK(kite_cells({3, 0, 1}) == TriangleSet::full(1).cells());
}

TEST_CASE("always-up Bob") {
  CHECK(bob_wins_everywhere({2, 1, 2}, *bob_always_up({2, 1, 2})));
  CHECK(bob_wins_everywhere({2, 0, 2}, *bob_always_up({2, 0, 2})));
  CHECK_THROWS_AS(bob_always_up({2, 0, 1}), PreconditionError);
  auto unchecked = bob_always_up({2, 0, 1}, false);
  const RabGameConfig c{2, 0, 1};
  CHECK_FALSE(strategy_wins(*unchecked, Player::Bob, rab_new_game(c, {{0, 0}, {0, 1}}), c));
  CHECK(strategy_wins(*unchecked, Player::Bob, rab_new_game({0, 3, 1}, {}), {0, 3, 1}));
}

TEST_CASE("diagonal Alice") {
  auto s = alice_diagonal({3, 2, 1});
  CHECK(alice_wins_everywhere({3, 2, 1}, *s));
  CHECK_THROWS_AS(alice_diagonal({1, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(alice_diagonal({3, 1, 1}), PreconditionError);
}

TEST_CASE("basis triangle Alice") {
  auto s = alice_basis_triangle({3, 0, 1});
  CHECK(s->choose_red({3, 0, 1}) == CellSet{{0, 0}, {1, 0}, {0, 1}});
  CHECK(alice_wins_everywhere({3, 0, 1}, *alice_basis_triangle({3, 0, 1})));
  CHECK(alice_wins_everywhere({6, 0, 2}, *alice_basis_triangle({6, 0, 2})));
  CHECK_THROWS_AS(alice_basis_triangle({5, 0, 2}), PreconditionError);
  CHECK_THROWS_AS(alice_basis_triangle({6, 1, 2}), PreconditionError);
}

TEST_CASE("kite Alice") {
  CHECK(alice_wins_everywhere({8, 2, 4}, *alice_kite({8, 2, 4})));
  CHECK_THROWS_AS(alice_kite({3, 1, 2}), PreconditionError);
  auto kite = alice_kite({6, 0, 2});
  auto basis = alice_basis_triangle({6, 0, 2});
  CHECK(kite->choose_red({6, 0, 2}) == basis->choose_red({6, 0, 2}));
}

TEST_CASE("recursive Bob") {
  CHECK(bob_wins_everywhere({2, 0, 1}, *bob_recursive({2, 0, 1})));
  CHECK(bob_wins_everywhere({3, 1, 2}, *bob_recursive({3, 1, 2})));
  CHECK_THROWS_AS(bob_recursive({8, 2, 4}), PreconditionError);
}

TEST_CASE("constructive strategies on small boards") {
  for (std::int64_t s = 0; s <= 4; ++s) {
    for (std::int64_t a = 0; a <= s; ++a) {
      for (std::int64_t r = 0; r <= 6; ++r) {
        const RabGameConfig c{r, a, s - a};
        CAPTURE(r);
        CAPTURE(a);
        if (rab_winner_predicate(r, a, c.b) == Player::Bob) {
          CHECK(bob_wins_everywhere(c, *bob_recursive(c)));
          if (c.b >= r) CHECK(bob_wins_everywhere(c, *bob_always_up(c)));
        } else {
          CHECK(alice_wins_everywhere(c, *alice_kite(c)));
        }
      }
    }
  }
}

TEST_CASE("recursive plan levels") {
  const RabGameConfig c{3, 1, 2};
  const CellSet red{{0, 0}, {1, 0}, {3, 0}};
  const RecursiveBobPlan plan(c, red);
  REQUIRE(plan.levels() >= 1);
  CHECK(plan.level_red(0).cells() == red);
  CHECK(plan.level_case(0) == ReductionCase::Triangle);
}

TEST_CASE("strategy factory") {
  const RabGameConfig c{3, 1, 2};
  CHECK(make_rab_strategy("recursive", Player::Bob, c)->name().find("recursive") != std::string::npos);
  CHECK_NOTHROW(make_rab_strategy("random:4", Player::Alice, c));
  CHECK_THROWS_AS(make_rab_strategy("kite", Player::Alice, c), PreconditionError);
  CHECK_NOTHROW(make_rab_strategy("kite", Player::Alice, c, false));
  CHECK_THROWS_AS(make_rab_strategy("nonsense", Player::Bob, c), std::invalid_argument);
  CHECK_FALSE(rab_strategy_names(Player::Alice).empty());
}
