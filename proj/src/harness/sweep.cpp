#include "gridgames/harness/sweep.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gridgames/harness/adversary.hpp"
#include "gridgames/oracle.hpp"
#include "gridgames/parallel.hpp"
#include "gridgames/rab.hpp"

namespace gridgames::harness {

using gridgames::to_string;

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad range '" + whole + "'");
  }
  return v;
}

std::vector<std::int64_t> values(const IntRange& r) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  IntRange r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(text.substr(0, colon), text);
    r.hi = parse_int(text.substr(colon + 1), text);
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

AuditedPlay audited_play(const DeclGameConfig& config, const std::string& adversary) {
  auto alice = make_adversary(adversary, config);
  auto bob = config.variant == DeclVariant::Lemma1 ? staircase::bob_lemma1_strategy(config)
                                                   : staircase::bob_lemma2_strategy(config);
  AuditedPlay out;
  out.transcript = decl_play(config, *alice, *bob, 2 * decl_min_round_cap(config));
  out.ledger = bob->ledger();
  out.report = staircase::audit_ledger(out.ledger, config, out.transcript);
  return out;
}

std::string rab_sweep_csv(const RabSweepSpec& spec) {
  struct Row {
    std::int64_t r, a, b;
    std::string text;
  };
  std::vector<Row> rows;
  for (std::int64_t r : values(spec.r)) {
    for (std::int64_t a : values(spec.a)) {
      for (std::int64_t b : values(spec.b)) rows.push_back({r, a, b, {}});
    }
  }
  parallel_for(static_cast<std::int64_t>(rows.size()), resolve_jobs(spec.jobs), [&](std::int64_t i) {
    Row& row = rows[static_cast<std::size_t>(i)];
    const RabGameConfig config{row.r, row.a, row.b};
    config.validate();
    const Player predicted = rab::rab_winner_predicate(row.r, row.a, row.b);
    std::string oracle_col;
    if (spec.solve && row.a + row.b <= 9) {
      oracle::SolveOptions opts;
      opts.jobs = 1;
      try {
        oracle_col = to_string(oracle::solve_rab(row.r, row.a, row.b, opts).winner);
      } catch (const std::exception&) {
        oracle_col = "cap";
      }
    }
    std::unique_ptr<RabStrategy> alice, bob;
    if (predicted == Player::Alice) {
      alice = rab::alice_kite(config);
      bob = rab::rab_random(Player::Bob, spec.seed);
    } else {
      alice = rab::rab_random(Player::Alice, spec.seed);
      bob = rab::bob_recursive(config);
    }
    const RabTranscript t = rab_play(config, *alice, *bob);
    std::ostringstream os;
    os << row.r << ',' << row.a << ',' << row.b << ',' << to_string(predicted) << ',' << oracle_col << ','
       << t.alice << ',' << t.bob << ',' << to_string(t.outcome.winner);
    row.text = os.str();
  });
  std::string out = "r,a,b,predicted,oracle,alice,bob,winner\n";
  for (const Row& row : rows) out += row.text + '\n';
  return out;
}

std::string decl_sweep_csv(const DeclSweepSpec& spec) {
  struct Row {
    DeclGameConfig config;
    std::string adversary;
    std::int64_t seed;
    std::string text;
  };
  std::vector<Row> rows;
  const bool seeded = spec.adversary != "micro_minimax";
  for (std::int64_t au : values(spec.a_up))
    for (std::int64_t ar : values(spec.a_right))
      for (std::int64_t b1 : values(spec.bob_1))
        for (std::int64_t b2 : values(spec.bob_2))
          for (std::int64_t r : values(spec.r))
            for (std::int64_t p : values(spec.p))
              for (std::int64_t f : values(spec.f)) {
                DeclGameConfig c;
                c.variant = spec.variant;
                c.a_up = au;
                c.a_right = ar;
                c.bob_budget_1 = b1;
                c.bob_budget_2 = b2;
                c.r = r;
                c.p = p;
                c.f = f;
                c.validate();
                for (std::int64_t s = 0; s < (seeded ? spec.seeds : 1); ++s) {
                  rows.push_back({c, seeded ? spec.adversary + ":" + std::to_string(s) : spec.adversary, s, {}});
                }
              }
  parallel_for(static_cast<std::int64_t>(rows.size()), resolve_jobs(spec.jobs), [&](std::int64_t i) {
    Row& row = rows[static_cast<std::size_t>(i)];
    const DeclGameConfig& c = row.config;
    const bool holds = staircase::lemma_condition(c).holds;
    const AuditedPlay play = audited_play(c, row.adversary);
    const auto& l = play.ledger;
    std::ostringstream os;
    os << (c.variant == DeclVariant::Lemma1 ? "lemma1" : "lemma2") << ',' << c.a_up << ',' << c.a_right << ','
       << c.bob_budget_1 << ',' << c.bob_budget_2 << ',' << c.r << ',' << c.p << ',' << c.f << ','
       << (holds ? "true" : "false") << ',' << row.adversary << ',' << to_string(play.transcript.outcome.winner) << ','
       << play.transcript.outcome.reason << ',' << l.breaches << ',' << l.avoid_right << ',' << l.return_right << ','
       << l.select_vertical << ',' << l.step_end_vertical << ',' << (play.report.counters_strict ? "true" : "false")
       << ',' << (play.report.counters_nonstrict ? "true" : "false") << ','
       << (play.report.final_white ? "true" : "false");
    row.text = os.str();
  });
  std::string out =
      "variant,a_up,a_right,bob_1,bob_2,r,p,f,condition,adversary,winner,reason,breaches,avoid_right,return_right,"
      "select_vertical,step_end_vertical,counters_strict,counters_nonstrict,final_white\n";
  for (const Row& row : rows) out += row.text + '\n';
  return out;
}

}  // namespace gridgames::harness
