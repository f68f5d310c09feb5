#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "gridgames/cell.hpp"

namespace gridgames {

// The (r,a,b)-game: Alice fixes at most r red cells, then the token moves up
// or right. On a red cell Bob must move it, on a white cell Alice must. The
// first player who has to move with an exhausted budget loses.

struct RabGameConfig {
  std::int64_t r = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  void validate() const;
};

struct RabGameState {
  CellSet red;
  Cell token{0, 0};
  std::int64_t a_left = 0;
  std::int64_t b_left = 0;
  bool finished = false;
  std::optional<Player> loser;

  Player mover() const { return red.contains(token) ? Player::Bob : Player::Alice; }

  friend bool operator==(const RabGameState&, const RabGameState&) = default;
};

/// Throws PreconditionError if |red| > r or a cell is off the board.
RabGameState rab_new_game(const RabGameConfig& config, CellSet red);

/// Moves the token for whoever is to move. Only Up and Right are allowed.
RabGameState rab_step(const RabGameState& state, Shift shift);

/// True iff the player to move has an exhausted budget.
inline bool rab_mover_stuck(const RabGameState& s) {
  return s.mover() == Player::Bob ? s.b_left == 0 : s.a_left == 0;
}

class RabStrategy {
 public:
  virtual ~RabStrategy() = default;
  virtual std::string name() const = 0;
  /// Alice's opening move. Bob strategies keep the default.
  virtual CellSet choose_red(const RabGameConfig&) { return {}; }
  /// Called only when the owning player is the mover.
  virtual Shift move(const RabGameConfig& config, const RabGameState& state) = 0;
  virtual std::unique_ptr<RabStrategy> clone() const = 0;
};

}  // namespace gridgames
