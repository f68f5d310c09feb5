#include <stdexcept>

#include "gridgames/errors.hpp"
#include "gridgames/transcript.hpp"

namespace gridgames {

DeclSnapshot DeclSnapshot::of(const DeclGameState& s) {
  DeclSnapshot snap;
  snap.token = s.token;
  snap.alice_up_used = s.alice_up_used;
  snap.alice_right_used = s.alice_right_used;
  snap.bob_used_1 = s.bob_used_1;
  snap.bob_used_2 = s.bob_used_2;
  snap.declarations_used = s.declarations_used;
  snap.consecutive_passes = s.consecutive_passes;
  snap.red_size = static_cast<std::int64_t>(s.red.size());
  snap.declarations_closed = s.declarations_closed;
  snap.finished = s.finished;
  return snap;
}

std::int64_t decl_min_round_cap(const DeclGameConfig& config) {
  return config.total_shift_budget() + config.p + 2;
}

DeclTranscript decl_play(const DeclGameConfig& config, DeclStrategy& alice, DeclStrategy& bob,
                         std::int64_t round_cap) {
  config.validate();
  if (round_cap < decl_min_round_cap(config)) {
    throw std::invalid_argument("round_cap " + std::to_string(round_cap) + " is below the required " +
                                std::to_string(decl_min_round_cap(config)));
  }
  DeclTranscript t;
  t.config = config;
  t.alice = alice.name();
  t.bob = bob.name();
  DeclGameState state = decl_new_game(config);

  for (std::int64_t round = 0; round < round_cap && !state.finished; ++round) {
    for (Player player : {Player::Alice, Player::Bob}) {
      if (state.finished) break;
      DeclStrategy& strategy = player == Player::Alice ? alice : bob;
      const DeclAction action = strategy.act(config, state);
      try {
        state = decl_apply(config, state, player, action);
      } catch (const RuleViolation& e) {
        t.outcome = {other(player), "forfeit", player, e.what()};
        t.final_state = state;
        return t;
      }
      t.events.push_back({state.turn, player, action, DeclSnapshot::of(state)});
    }
  }

  if (state.finished) {
    t.outcome = {decl_winner(state), "limit", std::nullopt, {}};
  } else {
    const Player w = state.red.contains(state.token) ? Player::Alice : Player::Bob;
    t.outcome = {w, "round_cap", std::nullopt, {}};
  }
  t.final_state = std::move(state);
  return t;
}

RabTranscript rab_play(const RabGameConfig& config, RabStrategy& alice, RabStrategy& bob) {
  config.validate();
  RabTranscript t;
  t.config = config;
  t.alice = alice.name();
  t.bob = bob.name();
  t.red = alice.choose_red(config);

  RabGameState state;
  try {
    state = rab_new_game(config, t.red);
  } catch (const PreconditionError& e) {
    t.outcome = {Player::Bob, "forfeit", Player::Alice, e.what()};
    t.final_state.a_left = config.a;
    t.final_state.b_left = config.b;
    return t;
  }

  std::int64_t step = 0;
  while (!state.finished) {
    const Player mover = state.mover();
    RabStrategy& strategy = mover == Player::Alice ? alice : bob;
    const Shift shift = strategy.move(config, state);
    try {
      state = rab_step(state, shift);
    } catch (const RuleViolation& e) {
      t.outcome = {other(mover), "forfeit", mover, e.what()};
      t.final_state = std::move(state);
      return t;
    }
    t.events.push_back({++step, mover, shift, state.token, state.a_left, state.b_left});
  }
  t.outcome = {other(*state.loser), "budget", std::nullopt, {}};
  t.final_state = std::move(state);
  return t;
}

}  // namespace gridgames
