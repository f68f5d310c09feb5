#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gridgames/decl_game.hpp"

namespace gridgames::oracle {

/// Board window [0,width) x [0,height) for micro declaration games. It must
/// hold every cell the token can reach and at most 64 cells.
struct MicroWindow {
  std::int64_t width = 0;
  std::int64_t height = 0;
};

struct MicroOptions {
  /// Maximum number of memoized positions.
  std::uint64_t state_cap = 20'000'000;
};

/// Smallest window holding every cell reachable under the budgets.
MicroWindow minimal_window(const DeclGameConfig& config);

/// Perfect-play solver for finitized declaration games. A pass answered by a
/// pass ends the game at the current cell. Alice only needs maximal
/// declarations of reachable white cells, since red never hurts her.
class DeclMicroSolver {
 public:
  /// Throws PreconditionError if the window is too small or budgets exceed 255.
  DeclMicroSolver(const DeclGameConfig& config, MicroWindow window, MicroOptions options = {});

  /// Winner from `state` under perfect play. Throws CapExceeded.
  Player winner(const DeclGameState& state);
  /// The first of Alice's candidate actions that wins, if any.
  std::optional<DeclAction> winning_action(const DeclGameState& state);
  /// Alice's candidate actions in the order the solver tries them. The pass
  /// comes last.
  std::vector<DeclAction> alice_candidates(const DeclGameState& state) const;

  std::uint64_t positions() const { return memo_.size(); }

  struct Node {
    std::uint64_t red = 0;
    std::int16_t x = 0, y = 0, au = 0, ar = 0, b1 = 0, b2 = 0, decl = 0;
    bool last_pass = false;
    bool alice = true;
  };

 private:
  struct Key {
    std::uint64_t red;
    std::uint64_t packed;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>()(k.red * 0x9E3779B97F4A7C15ULL ^ k.packed);
    }
  };

  Node node_of(const DeclGameState& state) const;
  Key key_of(const Node& n) const;
  std::uint64_t reach_mask(const Node& n) const;
  std::vector<std::uint64_t> declarations(const Node& after_shift) const;
  bool alice_wins(Node n);
  bool red_at(const Node& n) const;

  DeclGameConfig config_;
  MicroWindow window_;
  MicroOptions options_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

Player solve_decl_micro(const DeclGameConfig& config, MicroWindow window, MicroOptions options = {});

struct MicroCertificate {
  bool bob_wins_all = false;
  std::uint64_t positions = 0;
  std::uint64_t terminals = 0;
  /// Actions of both players leading to the first Alice win found.
  std::optional<std::vector<DeclAction>> counterexample;
};

/// Plays `bob` against every Alice behaviour: any shift, and any declaration
/// of up to r white window cells dominating the token. Bob's decisions are
/// taken from clones keyed by DeclStrategy::memory().
MicroCertificate certify_bob_strategy(const DeclGameConfig& config, MicroWindow window, const DeclStrategy& bob,
                                      MicroOptions options = {});

/// Alice playing the solver's first winning action, or the first candidate
/// when none wins. Closes her declarations when passing after a pass.
std::unique_ptr<DeclStrategy> make_micro_minimax_alice(const DeclGameConfig& config, MicroWindow window,
                                                       MicroOptions options = {});

}  // namespace gridgames::oracle
