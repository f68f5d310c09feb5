#include "gridgames/rab_game.hpp"

#include <stdexcept>

#include "gridgames/errors.hpp"

namespace gridgames {

void RabGameConfig::validate() const {
  if (r < 0 || a < 0 || b < 0) throw std::invalid_argument("r, a and b must be non-negative");
}

namespace {

void settle(RabGameState& s) {
  if (rab_mover_stuck(s)) {
    s.finished = true;
    s.loser = s.mover();
  }
}

}  // namespace

RabGameState rab_new_game(const RabGameConfig& config, CellSet red) {
  config.validate();
  if (static_cast<std::int64_t>(red.size()) > config.r) {
    throw PreconditionError("red set has " + std::to_string(red.size()) + " cells, more than r=" +
                            std::to_string(config.r));
  }
  for (const Cell& c : red) {
    if (!c.valid()) throw PreconditionError("red cell " + to_string(c) + " is off the board");
  }
  RabGameState s;
  s.red = std::move(red);
  s.a_left = config.a;
  s.b_left = config.b;
  settle(s);
  return s;
}

RabGameState rab_step(const RabGameState& state, Shift shift) {
  if (state.finished) throw RuleViolation("the game is finished");
  if (shift == Shift::Diagonal) throw RuleViolation("diagonal shifts are not part of the (r,a,b)-game");
  RabGameState next = state;
  if (state.mover() == Player::Bob) {
    if (next.b_left == 0) throw RuleViolation("Bob has no moves left");
    --next.b_left;
  } else {
    if (next.a_left == 0) throw RuleViolation("Alice has no moves left");
    --next.a_left;
  }
  next.token = shifted(next.token, shift);
  settle(next);
  return next;
}

}  // namespace gridgames
