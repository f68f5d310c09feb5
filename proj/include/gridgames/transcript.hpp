#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridgames/decl_game.hpp"
#include "gridgames/rab_game.hpp"

namespace gridgames {

struct Outcome {
  Player winner = Player::Bob;
  /// "limit" (quiescent end), "round_cap", "budget" (mover out of moves) or
  /// "forfeit".
  std::string reason;
  std::optional<Player> forfeit_by;
  std::string detail;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Counters recorded after each declaration-game turn.
struct DeclSnapshot {
  Cell token;
  std::int64_t alice_up_used = 0;
  std::int64_t alice_right_used = 0;
  std::int64_t bob_used_1 = 0;
  std::int64_t bob_used_2 = 0;
  std::int64_t declarations_used = 0;
  std::int64_t consecutive_passes = 0;
  std::int64_t red_size = 0;
  bool declarations_closed = false;
  bool finished = false;

  static DeclSnapshot of(const DeclGameState& s);
  friend bool operator==(const DeclSnapshot&, const DeclSnapshot&) = default;
};

struct DeclEvent {
  std::int64_t turn = 0;  // 1-based
  Player player = Player::Alice;
  DeclAction action;
  DeclSnapshot after;

  friend bool operator==(const DeclEvent&, const DeclEvent&) = default;
};

struct DeclTranscript {
  DeclGameConfig config;
  std::string alice;
  std::string bob;
  std::vector<DeclEvent> events;
  Outcome outcome;
  /// Final state; not serialized, rebuilt by replay.
  DeclGameState final_state;
};

struct RabEvent {
  std::int64_t step = 0;  // 1-based
  Player player = Player::Alice;
  Shift shift = Shift::Up;
  Cell token;
  std::int64_t a_left = 0;
  std::int64_t b_left = 0;

  friend bool operator==(const RabEvent&, const RabEvent&) = default;
};

struct RabTranscript {
  RabGameConfig config;
  std::string alice;
  std::string bob;
  CellSet red;
  std::vector<RabEvent> events;
  Outcome outcome;
  RabGameState final_state;
};

/// Alternates turns starting with Alice until the game is quiescent or
/// `round_cap` rounds (one Alice and one Bob turn each) have been played.
/// Throws std::invalid_argument if round_cap < total shift budget + p + 2.
DeclTranscript decl_play(const DeclGameConfig& config, DeclStrategy& alice, DeclStrategy& bob,
                         std::int64_t round_cap);

/// The smallest round cap decl_play accepts for `config`.
std::int64_t decl_min_round_cap(const DeclGameConfig& config);

RabTranscript rab_play(const RabGameConfig& config, RabStrategy& alice, RabStrategy& bob);

// JSON lines: header, one line per event, outcome. See docs/transcript_format.md.
void write_jsonl(std::ostream& out, const DeclTranscript& t);
void write_jsonl(std::ostream& out, const RabTranscript& t);
std::string to_jsonl(const DeclTranscript& t);
std::string to_jsonl(const RabTranscript& t);

DeclTranscript read_decl_jsonl(std::istream& in);
RabTranscript read_rab_jsonl(std::istream& in);

/// Re-applies the recorded actions from the initial state and checks every
/// snapshot and the outcome. Returns the final state; throws
/// std::runtime_error describing the first divergence.
DeclGameState replay(const DeclTranscript& t);
RabGameState replay(const RabTranscript& t);

}  // namespace gridgames
