#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gridgames/decl_game.hpp"
#include "gridgames/exact.hpp"
#include "gridgames/transcript.hpp"

namespace gridgames::staircase {

/// A_j = {(x+i, y + floor(i/f) + j) | i >= 0} for origin (x,y).
struct StaircaseId {
  Cell origin;
  std::int64_t j = 0;
  std::int64_t f = 1;

  friend bool operator==(const StaircaseId&, const StaircaseId&) = default;
};

/// Row of the staircase in column u; only meaningful for u >= origin.x.
inline std::int64_t staircase_row(const StaircaseId& s, std::int64_t u) {
  return s.origin.y + (u - s.origin.x) / s.f + s.j;
}

bool staircase_contains(const StaircaseId& s, Cell c);

/// True iff c is the last cell of its step (a right shift leaves the staircase).
bool is_step_end(const StaircaseId& s, Cell c);

std::int64_t count_red(const StaircaseId& s, const CellSet& red);

/// The staircase A_j, 0 <= j < delta, with the fewest red cells; ties go to
/// the smallest j.
StaircaseId choose_staircase(Cell origin, const CellSet& red, std::int64_t delta, std::int64_t f);

/// max(1, ceil(sqrt(r*p/f))).
std::int64_t delta_parameter(std::int64_t r, std::int64_t p, std::int64_t f);
BigInt delta_parameter(const BigInt& r, const BigInt& p, const BigInt& f);

/// One inequality L >= k * sqrt(r p^3 / f), multiplied through by f so that
/// both sides are integers: lhs_scaled >= sqrt(rhs_squared).
struct InequalityCheck {
  std::string name;
  BigInt lhs_scaled;
  BigInt rhs_squared;
  /// lhs_scaled - ceil(sqrt(rhs_squared)); the inequality holds iff slack >= 0.
  BigInt slack;
  bool holds = false;
};

struct LemmaCheck {
  bool holds = false;
  InequalityCheck first;
  InequalityCheck second;
};

/// b_right/f - a_up >= sqrt(r p^3/f) and b_up - a_up - a_right/f >= 2 sqrt(r p^3/f).
LemmaCheck lemma1_condition(const BigInt& a_up, const BigInt& a_right, const BigInt& b_up, const BigInt& b_right,
                            const BigInt& r, const BigInt& p, const BigInt& f);

/// b_right/f - a_up >= sqrt(r p^3/f) and b_diag - 2a_up - 2a_right/f >= 4 sqrt(r p^3/f).
/// Throws PreconditionError when f < 2.
LemmaCheck lemma2_condition(const BigInt& a_up, const BigInt& a_right, const BigInt& b_diag,
                            const BigInt& b_right, const BigInt& r, const BigInt& p, const BigInt& f);

/// Dispatches on config.variant.
LemmaCheck lemma_condition(const DeclGameConfig& config);

struct ShiftLedger {
  std::int64_t avoid_right = 0;
  std::int64_t return_right = 0;
  std::int64_t select_vertical = 0;
  std::int64_t step_end_vertical = 0;
  /// Turns on which the planned batch would have exceeded a budget.
  std::int64_t breaches = 0;
  /// Anchored Bob passes that happened with the token off a white staircase cell.
  std::int64_t unsafe_passes = 0;
  std::int64_t anchorings = 0;

  friend bool operator==(const ShiftLedger&, const ShiftLedger&) = default;
};

/// Bob's staircase strategy for either variant. Exposes its ledger and the
/// staircase it currently guards.
class StaircaseBob final : public DeclStrategy {
 public:
  explicit StaircaseBob(const DeclGameConfig& config);

  std::string name() const override;
  DeclAction act(const DeclGameConfig& config, const DeclGameState& state) override;
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<StaircaseBob>(*this); }
  std::vector<std::int64_t> memory() const override;

  const ShiftLedger& ledger() const { return ledger_; }
  bool anchored() const { return anchored_; }
  const StaircaseId& current() const { return stair_; }
  std::int64_t delta() const { return delta_; }

 private:
  DeclAction plan(const DeclGameConfig& config, const DeclGameState& state);
  DeclAction right_batch(const DeclGameConfig& config, const DeclGameState& state, Cell from,
                         std::int64_t returns);

  DeclVariant variant_;
  std::int64_t delta_ = 1;
  bool anchored_ = false;
  std::int64_t seen_declarations_ = 0;
  StaircaseId stair_;
  ShiftLedger ledger_;
};

/// Throws PreconditionError unless config.variant == Lemma1.
std::unique_ptr<StaircaseBob> bob_lemma1_strategy(const DeclGameConfig& config);
/// Throws PreconditionError unless config.variant == Lemma2 and f >= 2.
std::unique_ptr<StaircaseBob> bob_lemma2_strategy(const DeclGameConfig& config);

struct BoundCheck {
  std::string name;
  /// Closed-form bound as an exact rational.
  BigRational bound;
  std::int64_t observed = 0;
  bool strict_pass = false;     // observed < bound
  bool nonstrict_pass = false;  // observed <= bound
};

struct AuditReport {
  std::vector<BoundCheck> counters;  // the four shift kinds
  std::vector<BoundCheck> system;    // final inequality system; observed = budget
  std::int64_t breaches = 0;
  bool final_white = false;
  bool counters_strict = false;
  bool counters_nonstrict = false;
  bool system_holds = false;
};

/// Compares the ledger with its closed-form bounds. Throws std::runtime_error
/// when the ledger totals disagree with the transcript's final counters.
AuditReport audit_ledger(const ShiftLedger& ledger, const DeclGameConfig& config, const DeclTranscript& transcript);

/// One JSON record per bound.
std::string audit_to_jsonl(const AuditReport& report);

}  // namespace gridgames::staircase
