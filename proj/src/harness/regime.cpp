#include "gridgames/harness/regime.hpp"

#include <json.hpp>

#include "gridgames/errors.hpp"

namespace gridgames::harness {

using gridgames::to_string;

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::Thm2: return "thm2";
    case Theorem::Thm3: return "thm3";
    case Theorem::Thm4: return "thm4";
    case Theorem::Thm5: return "thm5";
  }
  return "?";
}

Theorem parse_theorem(const std::string& text) {
  std::string t = text;
  if (t.rfind("thm", 0) == 0) t = t.substr(3);
  if (t == "2") return Theorem::Thm2;
  if (t == "3") return Theorem::Thm3;
  if (t == "4") return Theorem::Thm4;
  if (t == "5") return Theorem::Thm5;
  throw std::invalid_argument("unknown theorem '" + text + "'");
}

namespace {

std::int64_t floor_div3(std::int64_t v) { return v >= 0 ? v / 3 : -((-v + 2) / 3); }

bool uses_lemma2(Theorem t, std::int64_t c) { return t == Theorem::Thm5 || (t == Theorem::Thm4 && c == 0); }

staircase::LemmaCheck condition_for(DeclVariant lemma, const BigInt& a_up, const RegimeAudit& a) {
  if (lemma == DeclVariant::Lemma1) {
    return staircase::lemma1_condition(a_up, a.budgets.alice_right, a.budgets.bob_vertical, a.budgets.bob_right, a.r,
                                       a.p, a.f);
  }
  return staircase::lemma2_condition(a_up, a.budgets.alice_right, a.budgets.bob_vertical, a.budgets.bob_right, a.r,
                                     a.p, a.f);
}

}  // namespace

RegimeAudit audit_parameters(Theorem theorem, std::int64_t n, std::int64_t c, std::int64_t d, std::int64_t e,
                             bool scan) {
  const bool late = theorem == Theorem::Thm4 || theorem == Theorem::Thm5;
  const std::int64_t s = floor_div3(n - (late ? 7 : 5));
  if (s < 0) throw PreconditionError("n=" + std::to_string(n) + " is too small: s would be negative");
  if (c < 0) throw PreconditionError("c must be non-negative");
  if (d < 1 || d > n) throw PreconditionError("d must lie in [1, n]");
  if (e < 1 || e > n - 1) throw PreconditionError("e must lie in [1, n-1]");

  RegimeAudit a;
  a.theorem = theorem;
  a.n = n;
  a.c = c;
  a.d = d;
  a.e = e;
  a.s = s;
  a.lemma = uses_lemma2(theorem, c) ? DeclVariant::Lemma2 : DeclVariant::Lemma1;
  a.r = pow2(n + c);
  a.p = pow2(s);
  a.f = a.lemma == DeclVariant::Lemma2 ? pow2(c + 1) : pow2(c);
  a.delta = staircase::delta_parameter(a.r, a.p, a.f);
  a.budgets.bob_vertical = pow2(n - 1) - pow2(n - 1 - e);
  a.budgets.bob_right = pow2(n + c - 1) - pow2(n + c - 1 - e);
  a.budgets.alice_up = pow2(n - d) + pow2(n - e);
  a.budgets.alice_right = pow2(n + c - d) + pow2(n + c - e);
  a.alice_up_footnote = pow2(n - d) + pow2(n + c - e);
  a.condition = condition_for(a.lemma, a.budgets.alice_up, a);
  a.condition_footnote = condition_for(a.lemma, a.alice_up_footnote, a);

  const BigInt num = a.r * a.p * a.p * a.p;
  a.radicand = BigRational(num, a.f);
  if (num % a.f == 0) {
    const std::int64_t k = log2_exact(num / a.f);
    if (k >= 0) {
      a.radicand_log2 = k;
      a.rhs1_log2_x2 = k;
      a.rhs2_log2_x2 = k + (a.lemma == DeclVariant::Lemma2 ? 4 : 2);
    }
  }
  if (theorem == Theorem::Thm2 || theorem == Theorem::Thm3) {
    a.stated_rhs1_log2_x2 = 2 * n - 5;
    a.stated_rhs2_log2_x2 = 2 * n - 3;
  } else if (theorem == Theorem::Thm5) {
    a.stated_rhs1_log2_x2 = 2 * n - 7;
    a.stated_rhs2_log2_x2 = 2 * n - 3;
  }

  if (scan) {
    for (std::int64_t sum = 2; sum <= 2 * n - 1 && !a.minimal_de; ++sum) {
      for (std::int64_t dd = 1; dd <= n && dd < sum; ++dd) {
        const std::int64_t ee = sum - dd;
        if (ee < 1 || ee > n - 1) continue;
        if (audit_parameters(theorem, n, c, dd, ee, false).condition.holds) {
          a.minimal_de = std::make_pair(dd, ee);
          break;
        }
      }
    }
  }
  return a;
}

std::optional<RegimeAudit> smallest_regime(Theorem theorem, std::int64_t c, std::int64_t max_n) {
  const std::int64_t first = theorem == Theorem::Thm4 || theorem == Theorem::Thm5 ? 7 : 5;
  for (std::int64_t n = std::max<std::int64_t>(first, 2); n <= max_n; ++n) {
    const RegimeAudit probe = audit_parameters(theorem, n, c, 1, 1, true);
    if (probe.minimal_de) return audit_parameters(theorem, n, c, probe.minimal_de->first, probe.minimal_de->second);
  }
  return std::nullopt;
}

DeclGameConfig regime_game_config(const RegimeAudit& a) {
  DeclGameConfig config;
  config.variant = a.lemma;
  config.a_up = to_int64(a.budgets.alice_up);
  config.a_right = to_int64(a.budgets.alice_right);
  config.bob_budget_1 = to_int64(a.budgets.bob_vertical);
  config.bob_budget_2 = to_int64(a.budgets.bob_right);
  config.r = to_int64(a.r);
  config.p = to_int64(a.p);
  config.f = to_int64(a.f);
  config.mode = DeclarationMode::function_graph(to_int64(a.r), to_int64(pow2(a.n)));
  config.validate();
  return config;
}

namespace {

nlohmann::json inequality_json(const staircase::InequalityCheck& c) {
  return {{"name", c.name},
          {"lhs_scaled", to_string(c.lhs_scaled)},
          {"rhs_squared", to_string(c.rhs_squared)},
          {"slack", to_string(c.slack)},
          {"holds", c.holds}};
}

nlohmann::json optional_json(const std::optional<std::int64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

}  // namespace

std::string audit_to_json(const RegimeAudit& a) {
  nlohmann::json j = {
      {"theorem", to_string(a.theorem)},
      {"n", a.n},
      {"c", a.c},
      {"d", a.d},
      {"e", a.e},
      {"s", a.s},
      {"lemma", a.lemma == DeclVariant::Lemma1 ? "lemma1" : "lemma2"},
      {"r", to_string(a.r)},
      {"p", to_string(a.p)},
      {"f", to_string(a.f)},
      {"delta", to_string(a.delta)},
      {"budgets",
       {{"bob_vertical", to_string(a.budgets.bob_vertical)},
        {"bob_right", to_string(a.budgets.bob_right)},
        {"alice_up", to_string(a.budgets.alice_up)},
        {"alice_right", to_string(a.budgets.alice_right)},
        {"alice_up_footnote", to_string(a.alice_up_footnote)}}},
      {"condition",
       {{"holds", a.condition.holds},
        {"first", inequality_json(a.condition.first)},
        {"second", inequality_json(a.condition.second)}}},
      {"condition_footnote",
       {{"holds", a.condition_footnote.holds},
        {"first", inequality_json(a.condition_footnote.first)},
        {"second", inequality_json(a.condition_footnote.second)}}},
      {"radicand", to_string(a.radicand)},
      {"radicand_log2", optional_json(a.radicand_log2)},
      {"rhs_log2_x2", {optional_json(a.rhs1_log2_x2), optional_json(a.rhs2_log2_x2)}},
      {"stated_rhs_log2_x2", {optional_json(a.stated_rhs1_log2_x2), optional_json(a.stated_rhs2_log2_x2)}},
      {"verdict", a.condition.holds ? "condition holds" : "condition fails"},
  };
  j["minimal_de"] = a.minimal_de ? nlohmann::json::array({a.minimal_de->first, a.minimal_de->second}) : nlohmann::json();
  return j.dump();
}

}  // namespace gridgames::harness
