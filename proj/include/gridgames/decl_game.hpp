#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridgames/cell.hpp"

namespace gridgames {

// Declaration games: Alice colors batches of cells red and both players shift
// a token; Alice wins iff the limit cell is red.
//
// Lemma1 variant: Alice {Up, Right}, Bob {Up, Right}.
// Lemma2 variant: Alice {Up, Right}, Bob {Diagonal, Right}.

enum class DeclVariant { Lemma1, Lemma2 };

struct DeclarationMode {
  enum class Kind { ArbitrarySet, FunctionGraph };
  Kind kind = Kind::ArbitrarySet;
  // FunctionGraph only: declared cells satisfy x < width and y < height and
  // a single declaration holds at most one cell per column.
  std::int64_t width = 0;
  std::int64_t height = 0;

  static DeclarationMode arbitrary() { return {}; }
  static DeclarationMode function_graph(std::int64_t width, std::int64_t height) {
    return {Kind::FunctionGraph, width, height};
  }
};

struct DeclGameConfig {
  DeclVariant variant = DeclVariant::Lemma1;
  std::int64_t a_up = 0;
  std::int64_t a_right = 0;
  /// Lemma1: Bob's Up budget. Lemma2: Bob's Diagonal budget.
  std::int64_t bob_budget_1 = 0;
  /// Bob's Right budget in both variants.
  std::int64_t bob_budget_2 = 0;
  std::int64_t r = 1;  // max cells per declaration
  std::int64_t p = 1;  // max number of declarations
  std::int64_t f = 1;  // staircase step length used by Bob's strategies
  DeclarationMode mode{};

  /// Throws std::invalid_argument when the configuration is malformed.
  void validate() const;

  /// The non-horizontal shift kind available to Bob.
  Shift bob_vertical_kind() const { return variant == DeclVariant::Lemma1 ? Shift::Up : Shift::Diagonal; }

  std::int64_t total_shift_budget() const { return a_up + a_right + bob_budget_1 + bob_budget_2; }
};

struct DeclGameState {
  Cell token{0, 0};
  CellSet red;
  std::int64_t alice_up_used = 0;
  std::int64_t alice_right_used = 0;
  std::int64_t bob_used_1 = 0;  // Up (Lemma1) or Diagonal (Lemma2)
  std::int64_t bob_used_2 = 0;  // Right
  std::int64_t declarations_used = 0;
  std::int64_t consecutive_passes = 0;
  bool declarations_closed = false;
  bool finished = false;
  Player to_move = Player::Alice;
  std::int64_t turn = 0;  // number of turns taken so far

  friend bool operator==(const DeclGameState&, const DeclGameState&) = default;
};

/// One turn. Alice: an optional declaration, at most one shift, and an
/// optional close of her declarations. Bob: a batch of `shifts` moves of the
/// single kind `shift` (zero means pass).
struct DeclAction {
  std::optional<CellSet> declare;
  Shift shift = Shift::Up;
  std::int64_t shifts = 0;
  bool close_declarations = false;

  bool is_pass() const { return shifts == 0 && !declare.has_value(); }

  static DeclAction pass() { return {}; }
  static DeclAction move(Shift s, std::int64_t count = 1) {
    DeclAction a;
    a.shift = s;
    a.shifts = count;
    return a;
  }
  static DeclAction declaration(CellSet cells) {
    DeclAction a;
    a.declare = std::move(cells);
    return a;
  }

  friend bool operator==(const DeclAction&, const DeclAction&) = default;
};

DeclGameState decl_new_game(const DeclGameConfig& config);

/// Applies one turn. Throws RuleViolation when `player` is not to move or
/// the action breaks a rule; the input state is never modified.
DeclGameState decl_apply(const DeclGameConfig& config, const DeclGameState& state, Player player,
                         const DeclAction& action);

/// Winner of a finished game: Alice iff the token rests on a red cell.
Player decl_winner(const DeclGameState& state);

/// Checks the state invariants against the configuration; returns an empty
/// string when they hold, otherwise a description of the first violation.
std::string decl_check_invariants(const DeclGameConfig& config, const DeclGameState& state);

/// A deterministic decision rule for one side of a declaration game.
class DeclStrategy {
 public:
  virtual ~DeclStrategy() = default;
  virtual std::string name() const = 0;
  virtual DeclAction act(const DeclGameConfig& config, const DeclGameState& state) = 0;
  virtual std::unique_ptr<DeclStrategy> clone() const = 0;
  /// Decision-relevant private memory. Two instances with equal memory make
  /// the same decision in the same state; exhaustive checkers key on it.
  virtual std::vector<std::int64_t> memory() const { return {}; }
};

/// Always passes; Alice's variant closes her declarations right away.
std::unique_ptr<DeclStrategy> make_passive_decl_strategy(Player side);

/// Replays a fixed list of actions, then passes forever.
std::unique_ptr<DeclStrategy> make_scripted_decl_strategy(std::string name, std::vector<DeclAction> script);

}  // namespace gridgames
