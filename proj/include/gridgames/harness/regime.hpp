#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "gridgames/decl_game.hpp"
#include "gridgames/exact.hpp"
#include "gridgames/staircase.hpp"

namespace gridgames::harness {

enum class Theorem { Thm2, Thm3, Thm4, Thm5 };

std::string to_string(Theorem t);
/// Accepts "2".."5" and "thm2".."thm5".
Theorem parse_theorem(const std::string& text);

/// Exact budgets of the game G_{n,c}.
struct RegimeBudgets {
  BigInt bob_vertical;  // 2^{n-1} - 2^{n-1-e}; Up or Diagonal shifts
  BigInt bob_right;     // 2^{n+c-1} - 2^{n+c-1-e}
  BigInt alice_up;      // 2^{n-d} + 2^{n-e}
  BigInt alice_right;   // 2^{n+c-d} + 2^{n+c-e}
};

struct RegimeAudit {
  Theorem theorem = Theorem::Thm2;
  std::int64_t n = 0, c = 0, d = 0, e = 0;
  std::int64_t s = 0;  // p = 2^s
  DeclVariant lemma = DeclVariant::Lemma1;
  BigInt r, p, f, delta;
  RegimeBudgets budgets;
  /// Footnote reading of Alice's up budget: 2^{n-d} + 2^{n+c-e}.
  BigInt alice_up_footnote;
  staircase::LemmaCheck condition;
  staircase::LemmaCheck condition_footnote;
  /// r p^3 / f and, when it is a power of two, its exponent.
  BigRational radicand;
  std::optional<std::int64_t> radicand_log2;
  /// Twice the log2 of each right-hand side: exact, and as stated in the
  /// text where it states one.
  std::optional<std::int64_t> rhs1_log2_x2, rhs2_log2_x2;
  std::optional<std::int64_t> stated_rhs1_log2_x2, stated_rhs2_log2_x2;
  /// Minimal (d, e) with the condition true, ordered by (d+e, d).
  std::optional<std::pair<std::int64_t, std::int64_t>> minimal_de;
};

/// s = floor((n-5)/3) for theorems 2 and 3, floor((n-7)/3) for 4 and 5.
/// Throws PreconditionError when s < 0, c < 0, d not in [1,n] or e not in
/// [1,n-1].
RegimeAudit audit_parameters(Theorem theorem, std::int64_t n, std::int64_t c, std::int64_t d, std::int64_t e,
                             bool scan = true);

/// Smallest n <= max_n (and its minimal d, e) for which the condition holds.
std::optional<RegimeAudit> smallest_regime(Theorem theorem, std::int64_t c, std::int64_t max_n = 64);

/// Game configuration for the audited regime with function-graph
/// declarations on a 2^{n+c} x 2^n window. Throws std::overflow_error when a
/// budget does not fit in 64 bits.
DeclGameConfig regime_game_config(const RegimeAudit& audit);

std::string audit_to_json(const RegimeAudit& audit);

}  // namespace gridgames::harness
