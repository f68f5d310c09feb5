#include "gridgames/decl_game.hpp"

#include <set>
#include <stdexcept>

#include "gridgames/errors.hpp"

namespace gridgames {

void DeclGameConfig::validate() const {
  if (a_up < 0 || a_right < 0 || bob_budget_1 < 0 || bob_budget_2 < 0) {
    throw std::invalid_argument("shift budgets must be non-negative");
  }
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (p < 1) throw std::invalid_argument("p must be positive");
  if (f < 1) throw std::invalid_argument("f must be positive");
  if (variant == DeclVariant::Lemma2 && f < 2) {
    throw std::invalid_argument("the diagonal-shift variant needs step length f >= 2");
  }
  if (mode.kind == DeclarationMode::Kind::FunctionGraph && (mode.width < 1 || mode.height < 1)) {
    throw std::invalid_argument("function-graph declarations need positive width and height");
  }
}

DeclGameState decl_new_game(const DeclGameConfig& config) {
  config.validate();
  return DeclGameState{};
}

namespace {

void check_declaration(const DeclGameConfig& config, const DeclGameState& state, const CellSet& cells) {
  if (state.declarations_closed) throw RuleViolation("declarations are closed");
  if (state.declarations_used >= config.p) {
    throw RuleViolation("declaration limit p=" + std::to_string(config.p) + " reached");
  }
  if (static_cast<std::int64_t>(cells.size()) > config.r) {
    throw RuleViolation("declaration of " + std::to_string(cells.size()) + " cells exceeds r=" +
                        std::to_string(config.r));
  }
  for (const Cell& c : cells) {
    if (!c.valid()) throw RuleViolation("declared cell " + to_string(c) + " is off the board");
  }
  if (config.mode.kind == DeclarationMode::Kind::FunctionGraph) {
    std::set<std::int64_t> columns;
    for (const Cell& c : cells) {
      if (c.x >= config.mode.width || c.y >= config.mode.height) {
        throw RuleViolation("declared cell " + to_string(c) + " lies outside the function-graph window");
      }
      if (!columns.insert(c.x).second) {
        throw RuleViolation("function-graph declaration has two cells in column " + std::to_string(c.x));
      }
    }
  }
}

}  // namespace

DeclGameState decl_apply(const DeclGameConfig& config, const DeclGameState& state, Player player,
                         const DeclAction& action) {
  if (state.finished) throw RuleViolation("the game is finished");
  if (player != state.to_move) throw RuleViolation(to_string(player) + " is not to move");
  if (action.shifts < 0) throw RuleViolation("negative shift count");

  DeclGameState next = state;
  if (player == Player::Alice) {
    if (action.shifts > 1) throw RuleViolation("Alice shifts the token at most once per turn");
    if (action.declare) {
      check_declaration(config, state, *action.declare);
      next.red.insert(action.declare->begin(), action.declare->end());
      ++next.declarations_used;
    }
    if (action.shifts == 1) {
      switch (action.shift) {
        case Shift::Up:
          if (next.alice_up_used >= config.a_up) throw RuleViolation("Alice's up budget is exhausted");
          ++next.alice_up_used;
          break;
        case Shift::Right:
          if (next.alice_right_used >= config.a_right) throw RuleViolation("Alice's right budget is exhausted");
          ++next.alice_right_used;
          break;
        case Shift::Diagonal:
          throw RuleViolation("Alice may not shift diagonally");
      }
      next.token = shifted(next.token, action.shift);
    }
    if (action.close_declarations) next.declarations_closed = true;
  } else {
    if (action.declare) throw RuleViolation("Bob cannot declare cells");
    if (action.close_declarations) throw RuleViolation("only Alice closes declarations");
    if (action.shifts > 0) {
      std::int64_t* used = nullptr;
      std::int64_t budget = 0;
      if (action.shift == Shift::Right) {
        used = &next.bob_used_2;
        budget = config.bob_budget_2;
      } else if (action.shift == config.bob_vertical_kind()) {
        used = &next.bob_used_1;
        budget = config.bob_budget_1;
      } else {
        throw RuleViolation("Bob may not shift " + to_string(action.shift) + " in this variant");
      }
      if (*used + action.shifts > budget) {
        throw RuleViolation("Bob's " + to_string(action.shift) + " budget would be exceeded (" +
                            std::to_string(*used) + "+" + std::to_string(action.shifts) + " > " +
                            std::to_string(budget) + ")");
      }
      *used += action.shifts;
      next.token = shifted(next.token, action.shift, action.shifts);
    }
  }

  if (next.declarations_used >= config.p) next.declarations_closed = true;
  next.consecutive_passes = action.is_pass() ? state.consecutive_passes + 1 : 0;
  next.finished = next.declarations_closed && next.consecutive_passes >= 2;
  next.to_move = other(player);
  ++next.turn;
  return next;
}

Player decl_winner(const DeclGameState& state) {
  if (!state.finished) throw std::logic_error("decl_winner called on an unfinished game");
  return state.red.contains(state.token) ? Player::Alice : Player::Bob;
}

std::string decl_check_invariants(const DeclGameConfig& config, const DeclGameState& state) {
  if (state.alice_up_used < 0 || state.alice_up_used > config.a_up) return "alice up counter out of budget";
  if (state.alice_right_used < 0 || state.alice_right_used > config.a_right) {
    return "alice right counter out of budget";
  }
  if (state.bob_used_1 < 0 || state.bob_used_1 > config.bob_budget_1) return "bob counter 1 out of budget";
  if (state.bob_used_2 < 0 || state.bob_used_2 > config.bob_budget_2) return "bob counter 2 out of budget";
  if (state.declarations_used > config.p) return "too many declarations";
  if (static_cast<std::int64_t>(state.red.size()) > config.r * state.declarations_used) {
    return "red set larger than r times the number of declarations";
  }
  Cell expected{state.alice_right_used + state.bob_used_2, state.alice_up_used};
  if (config.variant == DeclVariant::Lemma1) {
    expected.y += state.bob_used_1;
  } else {
    expected.x += state.bob_used_1;
    expected.y += state.bob_used_1;
  }
  if (expected != state.token) return "token does not match the recorded shifts";
  return {};
}

namespace {

class PassiveStrategy final : public DeclStrategy {
 public:
  explicit PassiveStrategy(Player side) : side_(side) {}
  std::string name() const override { return "passive"; }
  DeclAction act(const DeclGameConfig&, const DeclGameState&) override {
    DeclAction a = DeclAction::pass();
    a.close_declarations = side_ == Player::Alice;
    return a;
  }
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<PassiveStrategy>(*this); }

 private:
  Player side_;
};

class ScriptedStrategy final : public DeclStrategy {
 public:
  ScriptedStrategy(std::string name, std::vector<DeclAction> script)
      : name_(std::move(name)), script_(std::move(script)) {}
  std::string name() const override { return name_; }
  DeclAction act(const DeclGameConfig&, const DeclGameState&) override {
    if (next_ < script_.size()) return script_[next_++];
    return DeclAction::pass();
  }
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<ScriptedStrategy>(*this); }
  std::vector<std::int64_t> memory() const override { return {static_cast<std::int64_t>(next_)}; }

 private:
  std::string name_;
  std::vector<DeclAction> script_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<DeclStrategy> make_passive_decl_strategy(Player side) {
  return std::make_unique<PassiveStrategy>(side);
}

std::unique_ptr<DeclStrategy> make_scripted_decl_strategy(std::string name, std::vector<DeclAction> script) {
  return std::make_unique<ScriptedStrategy>(std::move(name), std::move(script));
}

}  // namespace gridgames
