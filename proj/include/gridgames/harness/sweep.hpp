#pragma once

#include <cstdint>
#include <string>

#include "gridgames/decl_game.hpp"
#include "gridgames/staircase.hpp"
#include "gridgames/transcript.hpp"

namespace gridgames::harness {

/// Inclusive integer range.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// "7" or "lo:hi". Throws std::invalid_argument.
IntRange parse_range(const std::string& text);

/// One play of the staircase Bob matching config.variant against an
/// adversary, with the ledger audit.
struct AuditedPlay {
  DeclTranscript transcript;
  staircase::ShiftLedger ledger;
  staircase::AuditReport report;
};

AuditedPlay audited_play(const DeclGameConfig& config, const std::string& adversary);

struct RabSweepSpec {
  IntRange r, a, b;
  /// Also run the exhaustive solver (a+b <= 9 only).
  bool solve = false;
  std::uint64_t seed = 0;
  int jobs = 0;
};

/// Header plus one row per (r, a, b), sorted by r, then a, then b. Columns:
/// r,a,b,predicted,oracle,alice,bob,winner. The winning side plays its
/// constructive strategy against a seeded random opponent.
std::string rab_sweep_csv(const RabSweepSpec& spec);

struct DeclSweepSpec {
  DeclVariant variant = DeclVariant::Lemma1;
  IntRange a_up, a_right, bob_1, bob_2, r, p, f{1, 1};
  std::string adversary = "chaser";
  std::int64_t seeds = 1;
  int jobs = 0;
};

/// One row per configuration and seed in grid order. Seeds are appended to
/// the adversary name unless it is micro_minimax.
std::string decl_sweep_csv(const DeclSweepSpec& spec);

}  // namespace gridgames::harness
