#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "doctest.h"
#include "gridgames/errors.hpp"
#include "gridgames/micro.hpp"
#include "gridgames/oracle.hpp"
#include "gridgames/rab.hpp"
#include "gridgames/staircase.hpp"
#include "gridgames/transcript.hpp"

using namespace gridgames;
using namespace gridgames::oracle;

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

CellSet mirror(const CellSet& s) {
  CellSet out;
  for (Cell c : s) out.insert({c.y, c.x});
  return out;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// Declaration-game search driven by the engine itself: every shift choice,
// every subset of at most r window cells, every Bob batch. A pass answered by
// a pass ends the game.
class NaiveDecl {
 public:
  NaiveDecl(const DeclGameConfig& c, MicroWindow w) : c_(c) {
    for (std::int64_t y = 0; y < w.height; ++y) {
      for (std::int64_t x = 0; x < w.width; ++x) cells_.push_back({x, y});
    }
  }

  bool alice_wins(const DeclGameState& s, bool last_pass) {
    const auto key = std::make_tuple(s.red, s.token, s.alice_up_used, s.alice_right_used, s.bob_used_1, s.bob_used_2,
                                     s.declarations_used, s.declarations_closed, s.to_move, last_pass);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    if (s.to_move == Player::Alice) {
      std::vector<std::optional<CellSet>> decls{std::nullopt};
      if (!s.declarations_closed) {
        for (std::uint64_t m = 1; m < (1ULL << cells_.size()); ++m) {
          if (std::popcount(m) <= c_.r) decls.push_back(pick(m));
        }
      }
      for (int shift = -1; shift < 2 && !result; ++shift) {
        for (const auto& d : decls) {
          DeclAction a;
          a.declare = d;
          if (shift >= 0) {
            a.shift = shift == 0 ? Shift::Up : Shift::Right;
            a.shifts = 1;
          }
          if (a.is_pass()) {
            if (last_pass ? s.red.contains(s.token) : alice_wins(decl_apply(c_, s, Player::Alice, a), true)) {
              result = true;
              break;
            }
            continue;
          }
          DeclGameState next;
          try {
            next = decl_apply(c_, s, Player::Alice, a);
          } catch (const RuleViolation&) {
            continue;
          }
          if (alice_wins(next, false)) {
            result = true;
            break;
          }
        }
      }
    } else {
      result = last_pass ? s.red.contains(s.token) : alice_wins(decl_apply(c_, s, Player::Bob, DeclAction::pass()), true);
      const std::int64_t left1 = c_.bob_budget_1 - s.bob_used_1, left2 = c_.bob_budget_2 - s.bob_used_2;
      for (std::int64_t k = 1; k <= left1 && result; ++k) {
        result = alice_wins(decl_apply(c_, s, Player::Bob, DeclAction::move(c_.bob_vertical_kind(), k)), false);
      }
      for (std::int64_t k = 1; k <= left2 && result; ++k) {
        result = alice_wins(decl_apply(c_, s, Player::Bob, DeclAction::move(Shift::Right, k)), false);
      }
    }
    memo_[key] = result;
    return result;
  }

 private:
  CellSet pick(std::uint64_t m) const {
    CellSet out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (m >> i & 1) out.insert(cells_[i]);
    }
    return out;
  }

  DeclGameConfig c_;
  std::vector<Cell> cells_;
  std::map<std::tuple<CellSet, Cell, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, bool,
                      Player, bool>,
           bool>
      memo_;
};

DeclGameConfig micro(DeclVariant v, std::int64_t au, std::int64_t ar, std::int64_t b1, std::int64_t b2, std::int64_t r,
                     std::int64_t p, std::int64_t f = 1) {
  DeclGameConfig c;
  c.variant = v;
  c.a_up = au;
  c.a_right = ar;
  c.bob_budget_1 = b1;
  c.bob_budget_2 = b2;
  c.r = r;
  c.p = p;
  c.f = v == DeclVariant::Lemma2 ? std::max<std::int64_t>(f, 2) : f;
  return c;
}

}  // namespace

TEST_CASE("fixed red set solver") {
  for (std::int64_t a = 0; a <= 4; ++a) {
    for (std::int64_t b = 0; b <= 4; ++b) CHECK(solve_fixed_R({}, a, b) == Player::Bob);
  }
  CHECK(solve_fixed_R({{0, 0}}, 0, 1) == Player::Bob);
  CHECK(solve_fixed_R({{0, 0}, {1, 0}, {0, 1}}, 0, 1) == Player::Alice);
  CHECK(solve_fixed_R({{0, 0}, {1, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}, 2, 4) == Player::Alice);
}

TEST_CASE("bitset and memoized routes agree; transposition symmetry") {
  for (std::int64_t s = 0; s <= 4; ++s) {
    const auto cells = board(s);
    for (std::int64_t a = 0; a <= s; ++a) {
      for (std::uint64_t m = 0; m < (1ULL << cells.size()); ++m) {
        const CellSet red = subset(cells, m);
        const Player dp = solve_fixed_R(red, a, s - a);
        CHECK(dp == solve_fixed_R_reference(red, a, s - a));
        CHECK(dp == solve_fixed_R(mirror(red), a, s - a));
        CHECK(alice_wins_fixed(rab::TriangleSet(static_cast<int>(s), red), static_cast<int>(a),
                               static_cast<int>(s - a)) == (dp == Player::Alice));
      }
    }
  }
}

TEST_CASE("exhaustive solve") {
  CHECK(solve_rab(0, 3, 2).winner == Player::Bob);
  CHECK(solve_rab(3, 0, 1).winner == Player::Alice);
  CHECK(solve_rab(2, 0, 1).winner == Player::Bob);
  const RabSolution s = solve_rab(8, 2, 4);
  REQUIRE(s.winner == Player::Alice);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness->size() <= 8);
  CHECK(solve_fixed_R(*s.witness, 2, 4) == Player::Alice);
  CHECK(solve_rab(8, 2, 4, {.cap = 300'000'000, .jobs = 3}).witness == s.witness);

  CHECK(red_set_count(2, 0, 1) == 1 + 3 + 3);
  CHECK(red_set_count(9, 1, 1) == 64);
  CHECK(red_set_count(8, 2, 4) == [] {
    std::uint64_t t = 0;
    for (int k = 0; k <= 8; ++k) t += binom(28, k);
    return t;
  }());
  CHECK_THROWS_AS(solve_rab(8, 2, 4, {.cap = 1000, .jobs = 1}), CapExceeded);

  std::uint64_t seen = 0;
  for_each_red_set(3, 1, 2, [&](const rab::TriangleSet& t) {
    CHECK(t.size() <= 3);
    ++seen;
    return true;
  });
  CHECK(seen == red_set_count(3, 1, 2));
}

TEST_CASE("exhaustive solve is monotone in r") {
  for (std::int64_t s = 0; s <= 4; ++s) {
    for (std::int64_t a = 0; a <= s; ++a) {
      Player prev = Player::Bob;
      for (std::int64_t r = 0; r <= 9; ++r) {
        const Player w = solve_rab(r, a, s - a).winner;
        if (prev == Player::Alice) CHECK(w == Player::Alice);
        prev = w;
      }
    }
  }
}

TEST_CASE("verification report") {
  const Thm7Report small = verify_theorem7(3, 6);
  CHECK(small.mismatches == 0);
  CHECK(small.entries.size() == 10 * 7);
  const Thm7Report zero = verify_theorem7(0, 0);
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].solved == Player::Bob);

  std::istringstream lines(thm7_to_jsonl(small));
  std::string line;
  std::size_t records = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    ++records;
  }
  CHECK(records == small.entries.size() + 1);
  CHECK(last["type"] == "summary");
  CHECK(last["mismatches"] == 0);
}

TEST_CASE("strategy checkers") {
  const RabGameConfig c{2, 0, 1};
  auto up = rab::bob_always_up(c, false);
  const StrategyCheck k = check_bob_strategy(c, *up);
  CHECK(k.losses > 0);
  REQUIRE(k.counterexample.has_value());
  CHECK(solve_fixed_R(*k.counterexample, 0, 1) == Player::Bob);
  CHECK_FALSE(bob_strategy_wins(c, *up, *k.counterexample));

  auto rec = rab::bob_recursive(c);
  CHECK(check_bob_strategy(c, *rec).losses == 0);
  auto kite = rab::alice_kite({8, 2, 4});
  CHECK(alice_strategy_wins({8, 2, 4}, *kite));
}

TEST_CASE("micro solver examples") {
  const DeclGameConfig still = micro(DeclVariant::Lemma1, 0, 0, 0, 0, 1, 1);
  CHECK(solve_decl_micro(still, minimal_window(still)) == Player::Alice);
  const DeclGameConfig flee = micro(DeclVariant::Lemma1, 0, 0, 0, 1, 1, 1);
  CHECK(solve_decl_micro(flee, minimal_window(flee)) == Player::Bob);
  const DeclGameConfig pair = micro(DeclVariant::Lemma1, 0, 0, 0, 1, 2, 1);
  CHECK(solve_decl_micro(pair, minimal_window(pair)) == Player::Alice);

  CHECK(minimal_window(micro(DeclVariant::Lemma1, 1, 2, 3, 4, 1, 1)).width == 2 + 4 + 1);
  CHECK(minimal_window(micro(DeclVariant::Lemma1, 1, 2, 3, 4, 1, 1)).height == 1 + 3 + 1);
  CHECK(minimal_window(micro(DeclVariant::Lemma2, 1, 2, 3, 4, 1, 1)).width == 2 + 4 + 3 + 1);
  CHECK_THROWS_AS(DeclMicroSolver(flee, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(DeclMicroSolver(still, {9, 8}), PreconditionError);
  const DeclGameConfig big = micro(DeclVariant::Lemma1, 2, 2, 3, 3, 2, 2);
  CHECK_THROWS_AS(solve_decl_micro(big, minimal_window(big), {.state_cap = 10}), CapExceeded);
}

TEST_CASE("micro solver against engine-driven search") {
  int alice = 0, bob = 0;
  for (DeclVariant v : {DeclVariant::Lemma1, DeclVariant::Lemma2}) {
    for (int r = 1; r <= 2; ++r) {
      for (int p = 1; p <= 2; ++p) {
        for (int bits = 0; bits < 16; ++bits) {
          const DeclGameConfig c = micro(v, bits & 1, bits >> 1 & 1, bits >> 2 & 1, bits >> 3 & 1, r, p);
          const MicroWindow w = minimal_window(c);
          if (w.width * w.height > 9) continue;
          NaiveDecl naive(c, w);
          const Player want = naive.alice_wins(decl_new_game(c), false) ? Player::Alice : Player::Bob;
          DeclMicroSolver solver(c, w);
          CAPTURE(bits);
          CAPTURE(r);
          CAPTURE(p);
          CHECK(solver.winner(decl_new_game(c)) == want);
          (want == Player::Alice ? alice : bob)++;
        }
      }
    }
  }
  CHECK(alice > 0);
  CHECK(bob > 0);
}

TEST_CASE("micro certification") {
  const DeclGameConfig c = micro(DeclVariant::Lemma1, 0, 0, 0, 1, 2, 1);
  const MicroWindow w = minimal_window(c);
  REQUIRE(solve_decl_micro(c, w) == Player::Alice);
  auto passive = make_passive_decl_strategy(Player::Bob);
  const MicroCertificate refuted = certify_bob_strategy(c, w, *passive);
  CHECK_FALSE(refuted.bob_wins_all);
  REQUIRE(refuted.counterexample.has_value());
  CHECK_FALSE(refuted.counterexample->empty());

  const DeclGameConfig ok = micro(DeclVariant::Lemma1, 1, 1, 4, 2, 1, 1);
  REQUIRE(staircase::lemma_condition(ok).holds);
  auto stair = staircase::bob_lemma1_strategy(ok);
  const MicroCertificate cert = certify_bob_strategy(ok, minimal_window(ok), *stair);
  CHECK(cert.bob_wins_all);
  CHECK(cert.positions > 0);
  CHECK(solve_decl_micro(ok, minimal_window(ok)) == Player::Bob);

  // A certificate never contradicts the solver.
  for (int bits = 0; bits < 81; ++bits) {
    const DeclGameConfig k = micro(DeclVariant::Lemma1, bits % 3, bits / 3 % 3, bits / 9 % 3, bits / 27, 1, 1);
    const MicroWindow kw = minimal_window(k);
    if (kw.width * kw.height > 36) continue;
    auto b = staircase::bob_lemma1_strategy(k);
    if (certify_bob_strategy(k, kw, *b).bob_wins_all) CHECK(solve_decl_micro(k, kw) == Player::Bob);
  }
}

TEST_CASE("micro minimax Alice") {
  const DeclGameConfig c = micro(DeclVariant::Lemma1, 1, 0, 0, 1, 2, 1);
  const MicroWindow w = minimal_window(c);
  auto alice = make_micro_minimax_alice(c, w);
  auto bob = make_passive_decl_strategy(Player::Bob);
  const DeclTranscript t = decl_play(c, *alice, *bob, decl_min_round_cap(c));
  CHECK(t.outcome.winner == Player::Alice);
  CHECK(t.outcome.reason == "limit");

  DeclMicroSolver solver(c, w);
  const auto cands = solver.alice_candidates(decl_new_game(c));
  REQUIRE_FALSE(cands.empty());
  CHECK(cands.back().is_pass());
  CHECK(solver.winning_action(decl_new_game(c)).has_value());
}
