#include "gridgames/staircase.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gridgames/errors.hpp"

namespace gridgames::staircase {

bool staircase_contains(const StaircaseId& s, Cell c) {
  return c.x >= s.origin.x && c.y == staircase_row(s, c.x);
}

bool is_step_end(const StaircaseId& s, Cell c) {
  return staircase_contains(s, c) && (c.x - s.origin.x) % s.f == s.f - 1;
}

std::int64_t count_red(const StaircaseId& s, const CellSet& red) {
  return std::count_if(red.begin(), red.end(), [&](Cell c) { return staircase_contains(s, c); });
}

StaircaseId choose_staircase(Cell origin, const CellSet& red, std::int64_t delta, std::int64_t f) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  if (f < 1) throw std::invalid_argument("f must be positive");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(delta), 0);
  for (const Cell& c : red) {
    if (c.x < origin.x) continue;
    const std::int64_t t = c.y - origin.y - (c.x - origin.x) / f;
    if (t >= 0 && t < delta) ++counts[static_cast<std::size_t>(t)];
  }
  const auto best = std::min_element(counts.begin(), counts.end());
  return {origin, static_cast<std::int64_t>(best - counts.begin()), f};
}

BigInt delta_parameter(const BigInt& r, const BigInt& p, const BigInt& f) {
  if (r < 1 || p < 1 || f < 1) throw std::invalid_argument("delta_parameter needs r, p, f >= 1");
  const BigInt d = ceil_isqrt(ceil_div(r * p, f));
  return d < 1 ? BigInt(1) : d;
}

std::int64_t delta_parameter(std::int64_t r, std::int64_t p, std::int64_t f) {
  return to_int64(delta_parameter(BigInt(r), BigInt(p), BigInt(f)));
}

namespace {

InequalityCheck inequality(std::string name, BigInt lhs_scaled, BigInt rhs_squared) {
  InequalityCheck c;
  c.name = std::move(name);
  c.slack = lhs_scaled - ceil_isqrt(rhs_squared);
  c.holds = c.slack >= 0;
  c.lhs_scaled = std::move(lhs_scaled);
  c.rhs_squared = std::move(rhs_squared);
  return c;
}

}  // namespace

LemmaCheck lemma1_condition(const BigInt& a_up, const BigInt& a_right, const BigInt& b_up, const BigInt& b_right,
                            const BigInt& r, const BigInt& p, const BigInt& f) {
  if (f < 1) throw PreconditionError("f must be positive");
  const BigInt k = r * p * p * p * f;
  LemmaCheck out;
  out.first = inequality("b_right - a_up*f >= sqrt(r*p^3*f)", b_right - a_up * f, k);
  out.second = inequality("f*(b_up - a_up) - a_right >= 2*sqrt(r*p^3*f)", f * (b_up - a_up) - a_right, 4 * k);
  out.holds = out.first.holds && out.second.holds;
  return out;
}

LemmaCheck lemma2_condition(const BigInt& a_up, const BigInt& a_right, const BigInt& b_diag,
                            const BigInt& b_right, const BigInt& r, const BigInt& p, const BigInt& f) {
  if (f < 2) throw PreconditionError("the diagonal variant needs f >= 2");
  const BigInt k = r * p * p * p * f;
  LemmaCheck out;
  out.first = inequality("b_right - a_up*f >= sqrt(r*p^3*f)", b_right - a_up * f, k);
  out.second = inequality("f*(b_diag - 2*a_up) - 2*a_right >= 4*sqrt(r*p^3*f)",
                          f * (b_diag - 2 * a_up) - 2 * a_right, 16 * k);
  out.holds = out.first.holds && out.second.holds;
  return out;
}

LemmaCheck lemma_condition(const DeclGameConfig& c) {
  if (c.variant == DeclVariant::Lemma1) {
    return lemma1_condition(c.a_up, c.a_right, c.bob_budget_1, c.bob_budget_2, c.r, c.p, c.f);
  }
  return lemma2_condition(c.a_up, c.a_right, c.bob_budget_1, c.bob_budget_2, c.r, c.p, c.f);
}

StaircaseBob::StaircaseBob(const DeclGameConfig& config)
    : variant_(config.variant), delta_(delta_parameter(config.r, config.p, config.f)) {
  config.validate();
  stair_.f = config.f;
}

std::string StaircaseBob::name() const {
  return variant_ == DeclVariant::Lemma1 ? "staircase-lemma1" : "staircase-lemma2";
}

std::vector<std::int64_t> StaircaseBob::memory() const {
  return {anchored_ ? 1 : 0, seen_declarations_, stair_.origin.x, stair_.origin.y, stair_.j};
}

DeclAction StaircaseBob::act(const DeclGameConfig& config, const DeclGameState& state) {
  DeclAction a = plan(config, state);
  if (a.is_pass() && anchored_ && !(staircase_contains(stair_, state.token) && !state.red.contains(state.token))) {
    ++ledger_.unsafe_passes;
  }
  return a;
}

namespace {

std::int64_t vertical_left(const DeclGameConfig& c, const DeclGameState& s) { return c.bob_budget_1 - s.bob_used_1; }
std::int64_t right_left(const DeclGameConfig& c, const DeclGameState& s) { return c.bob_budget_2 - s.bob_used_2; }

// Diagonal shifts from (u,v) until the token sits on the staircase; the
// token starts below it.
std::int64_t diagonals_to_reach(const StaircaseId& s, Cell from) {
  std::int64_t k = 0;
  while (from.y + k < staircase_row(s, from.x + k)) ++k;
  return k;
}

}  // namespace

DeclAction StaircaseBob::right_batch(const DeclGameConfig& config, const DeclGameState& state, Cell from,
                                     std::int64_t returns) {
  std::int64_t avoid = 0;
  Cell c = from;
  while (state.red.contains(c)) {
    ++avoid;
    const bool leaving = is_step_end(stair_, c);
    ++c.x;
    if (leaving) break;
  }
  const std::int64_t total = returns + avoid;
  if (total == 0) return DeclAction::pass();
  if (total > right_left(config, state)) {
    ++ledger_.breaches;
    return DeclAction::pass();
  }
  ledger_.return_right += returns;
  ledger_.avoid_right += avoid;
  return DeclAction::move(Shift::Right, total);
}

DeclAction StaircaseBob::plan(const DeclGameConfig& config, const DeclGameState& state) {
  const Shift vertical = config.bob_vertical_kind();
  if (state.declarations_used > seen_declarations_) {
    seen_declarations_ = state.declarations_used;
    anchored_ = true;
    ++ledger_.anchorings;
    stair_ = choose_staircase(state.token, state.red, delta_, config.f);
    if (stair_.j > 0) {
      std::int64_t k = stair_.j;
      if (variant_ == DeclVariant::Lemma2) {
        k = 0;
        while (k - k / config.f < stair_.j) ++k;
      }
      if (k > vertical_left(config, state)) {
        ++ledger_.breaches;
        return DeclAction::pass();
      }
      ledger_.select_vertical += k;
      return DeclAction::move(vertical, k);
    }
  }
  if (!anchored_) return DeclAction::pass();

  const Cell t = state.token;
  const std::int64_t row = staircase_row(stair_, t.x);
  if (t.y < row) {
    const std::int64_t k = variant_ == DeclVariant::Lemma1 ? row - t.y : diagonals_to_reach(stair_, t);
    if (k > vertical_left(config, state)) {
      ++ledger_.breaches;
      return DeclAction::pass();
    }
    ledger_.step_end_vertical += k;
    return DeclAction::move(vertical, k);
  }
  if (t.y > row) {
    const std::int64_t start = stair_.origin.x + (t.y - stair_.origin.y - stair_.j) * config.f;
    return right_batch(config, state, {start, t.y}, start - t.x);
  }
  return right_batch(config, state, t, 0);
}

std::unique_ptr<StaircaseBob> bob_lemma1_strategy(const DeclGameConfig& config) {
  if (config.variant != DeclVariant::Lemma1) throw PreconditionError("bob_lemma1_strategy needs the up/right variant");
  return std::make_unique<StaircaseBob>(config);
}

std::unique_ptr<StaircaseBob> bob_lemma2_strategy(const DeclGameConfig& config) {
  if (config.variant != DeclVariant::Lemma2) {
    throw PreconditionError("bob_lemma2_strategy needs the diagonal/right variant");
  }
  if (config.f < 2) throw PreconditionError("bob_lemma2_strategy needs f >= 2");
  return std::make_unique<StaircaseBob>(config);
}

namespace {

BoundCheck counter_check(std::string name, const BigRational& bound, std::int64_t observed) {
  BoundCheck b;
  b.name = std::move(name);
  b.bound = bound;
  b.observed = observed;
  b.strict_pass = BigRational(observed) < bound;
  b.nonstrict_pass = BigRational(observed) <= bound;
  return b;
}

BoundCheck system_check(std::string name, const BigRational& bound, std::int64_t budget) {
  BoundCheck b = counter_check(std::move(name), bound, budget);
  b.strict_pass = b.nonstrict_pass = BigRational(budget) >= bound;
  return b;
}

}  // namespace

AuditReport audit_ledger(const ShiftLedger& ledger, const DeclGameConfig& config, const DeclTranscript& transcript) {
  const DeclGameState& fin = transcript.final_state;
  if (ledger.avoid_right + ledger.return_right != fin.bob_used_2) {
    throw std::runtime_error("ledger right shifts (" + std::to_string(ledger.avoid_right + ledger.return_right) +
                             ") disagree with the transcript (" + std::to_string(fin.bob_used_2) + ")");
  }
  if (ledger.select_vertical + ledger.step_end_vertical != fin.bob_used_1) {
    throw std::runtime_error("ledger vertical shifts (" +
                             std::to_string(ledger.select_vertical + ledger.step_end_vertical) +
                             ") disagree with the transcript (" + std::to_string(fin.bob_used_1) + ")");
  }

  const bool l2 = config.variant == DeclVariant::Lemma2;
  const BigRational r = config.r, p = config.p, f = config.f;
  const BigRational delta = delta_parameter(config.r, config.p, config.f);
  const BigRational a_up = config.a_up, a_right = config.a_right;
  const BigRational b_prime = ledger.avoid_right + ledger.return_right;
  const BigRational red_term = r * p * p / delta;

  AuditReport rep;
  rep.counters.push_back(counter_check("avoid_right", red_term, ledger.avoid_right));
  rep.counters.push_back(counter_check("return_right", a_up * f, ledger.return_right));
  rep.counters.push_back(counter_check("select_vertical", (l2 ? 2 : 1) * delta * p, ledger.select_vertical));
  rep.counters.push_back(
      counter_check("step_end_vertical", (l2 ? 2 : 1) * (b_prime + a_right) / f, ledger.step_end_vertical));

  rep.system.push_back(system_check("b_right >= r*p^2/Delta + a_up*f", red_term + a_up * f, config.bob_budget_2));
  if (l2) {
    rep.system.push_back(system_check("b_diag >= 2*(r*p^2/Delta + f*a_up + a_right)/f + 2*Delta*p",
                                      2 * (red_term + f * a_up + a_right) / f + 2 * delta * p, config.bob_budget_1));
  } else {
    rep.system.push_back(system_check("b_up >= r*p^2/(Delta*f) + Delta*p + a_up + a_right/f",
                                      red_term / f + delta * p + a_up + a_right / f, config.bob_budget_1));
  }

  rep.breaches = ledger.breaches;
  rep.final_white = !fin.red.contains(fin.token);
  rep.counters_strict = std::all_of(rep.counters.begin(), rep.counters.end(), [](const BoundCheck& b) { return b.strict_pass; });
  rep.counters_nonstrict =
      std::all_of(rep.counters.begin(), rep.counters.end(), [](const BoundCheck& b) { return b.nonstrict_pass; });
  rep.system_holds = std::all_of(rep.system.begin(), rep.system.end(), [](const BoundCheck& b) { return b.strict_pass; });
  return rep;
}

std::string audit_to_jsonl(const AuditReport& report) {
  std::ostringstream os;
  auto emit = [&](const BoundCheck& b, const char* kind) {
    nlohmann::json j = {{"bound", b.name},         {"kind", kind},
                        {"closed_form", to_string(b.bound)}, {"observed", b.observed},
                        {"strict", b.strict_pass}, {"nonstrict", b.nonstrict_pass}};
    os << j.dump() << '\n';
  };
  for (const BoundCheck& b : report.counters) emit(b, "counter");
  for (const BoundCheck& b : report.system) emit(b, "system");
  nlohmann::json summary = {{"bound", "summary"},
                            {"breaches", report.breaches},
                            {"final_white", report.final_white},
                            {"counters_strict", report.counters_strict},
                            {"counters_nonstrict", report.counters_nonstrict},
                            {"system_holds", report.system_holds}};
  os << summary.dump() << '\n';
  return os.str();
}

}  // namespace gridgames::staircase
