// Command-line front end: plays, oracle runs, audits, sweeps and a text
// board for interactive play.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridgames/errors.hpp"
#include "gridgames/harness/adversary.hpp"
#include "gridgames/harness/board.hpp"
#include "gridgames/harness/regime.hpp"
#include "gridgames/harness/sfamily.hpp"
#include "gridgames/harness/sweep.hpp"
#include "gridgames/micro.hpp"
#include "gridgames/oracle.hpp"
#include "gridgames/parallel.hpp"
#include "gridgames/rab.hpp"
#include "gridgames/staircase.hpp"
#include "gridgames/transcript.hpp"

using namespace gridgames;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct DeclFlags {
  std::string variant = "lemma1";
  std::int64_t a_up = 0, a_right = 0, bob_1 = 0, bob_2 = 0, r = 1, p = 1, f = 1;
  std::string mode = "arbitrary";
  std::int64_t width = 0, height = 0;
  std::string theorem;
  std::int64_t n = 0, c = 0, d = 0, e = 0;
};

void add_decl_flags(CLI::App* app, DeclFlags& f) {
  app->add_option("--variant", f.variant, "lemma1 (Bob up/right) or lemma2 (Bob diagonal/right)")
      ->check(CLI::IsMember({"lemma1", "lemma2"}));
  app->add_option("--a-up", f.a_up, "Alice's Up budget")->check(CLI::NonNegativeNumber);
  app->add_option("--a-right", f.a_right, "Alice's Right budget")->check(CLI::NonNegativeNumber);
  app->add_option("--bob-1,--b-up,--b-diag", f.bob_1, "Bob's Up (lemma1) or Diagonal (lemma2) budget")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--bob-2,--b-right", f.bob_2, "Bob's Right budget")->check(CLI::NonNegativeNumber);
  app->add_option("--p", f.p, "declarations allowed")->check(CLI::PositiveNumber);
  app->add_option("--f", f.f, "staircase step length")->check(CLI::PositiveNumber);
  app->add_option("--mode", f.mode, "arbitrary or graph")->check(CLI::IsMember({"arbitrary", "graph"}));
  app->add_option("--width", f.width, "function-graph width");
  app->add_option("--height", f.height, "function-graph height");
  app->add_option("--theorem", f.theorem, "derive the game from a regime audit (2..5)");
  app->add_option("--n", f.n, "regime n");
  app->add_option("--c", f.c, "regime c");
  app->add_option("--d", f.d, "regime d (default: minimal)");
  app->add_option("--e", f.e, "regime e (default: minimal)");
}

DeclGameConfig decl_config(const DeclFlags& f) {
  if (!f.theorem.empty()) {
    const harness::Theorem th = harness::parse_theorem(f.theorem);
    harness::RegimeAudit a = harness::audit_parameters(th, f.n, f.c, f.d > 0 ? f.d : 1, f.e > 0 ? f.e : 1);
    if (f.d == 0 || f.e == 0) {
      if (!a.minimal_de) throw std::invalid_argument("no (d, e) satisfies the condition for this n");
      a = harness::audit_parameters(th, f.n, f.c, a.minimal_de->first, a.minimal_de->second);
    }
    return harness::regime_game_config(a);
  }
  DeclGameConfig c;
  c.variant = f.variant == "lemma2" ? DeclVariant::Lemma2 : DeclVariant::Lemma1;
  c.a_up = f.a_up;
  c.a_right = f.a_right;
  c.bob_budget_1 = f.bob_1;
  c.bob_budget_2 = f.bob_2;
  c.r = f.r;
  c.p = f.p;
  c.f = f.f;
  if (f.mode == "graph") c.mode = DeclarationMode::function_graph(f.width, f.height);
  c.validate();
  return c;
}

std::unique_ptr<DeclStrategy> decl_bob(const std::string& name, const DeclGameConfig& c) {
  if (name == "staircase") {
    if (c.variant == DeclVariant::Lemma1) return staircase::bob_lemma1_strategy(c);
    return staircase::bob_lemma2_strategy(c);
  }
  if (name == "passive") return make_passive_decl_strategy(Player::Bob);
  throw std::invalid_argument("unknown Bob strategy '" + name + "' (staircase, passive)");
}

std::unique_ptr<DeclStrategy> decl_alice(const std::string& name, const DeclGameConfig& c) {
  if (name == "passive") return make_passive_decl_strategy(Player::Alice);
  return harness::make_adversary(name, c);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

std::string outcome_line(const Outcome& o) {
  std::string s = "winner: " + to_string(o.winner) + " (" + o.reason;
  if (o.forfeit_by) s += ", forfeit by " + to_string(*o.forfeit_by);
  if (!o.detail.empty()) s += ": " + o.detail;
  return s + ")";
}

// ---- interactive -------------------------------------------------------

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int interactive_rab(const RabGameConfig& config, Player human, const std::string& opponent_name) {
  auto opponent = rab::make_rab_strategy(opponent_name, other(human), config, false);
  const std::int64_t side = config.a + config.b + 1;
  CellSet red;
  if (human == Player::Alice) {
    while (true) {
      std::cout << "red cells (at most " << config.r << ", e.g. 0,0 1,1)> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) return 0;
      try {
        red = parse_cells(line);
        rab_new_game(config, red);
        break;
      } catch (const std::exception& e) {
        std::cout << "illegal: " << e.what() << '\n';
      }
    }
  } else {
    red = opponent->choose_red(config);
  }
  RabGameState s;
  try {
    s = rab_new_game(config, red);
  } catch (const PreconditionError& e) {
    std::cout << "Alice forfeits: " << e.what() << '\n';
    return 0;
  }
  while (!s.finished) {
    std::cout << harness::render_board(s.red, s.token, side, side) << "a_left=" << s.a_left << " b_left=" << s.b_left
              << " mover=" << to_string(s.mover()) << '\n';
    Shift shift = Shift::Up;
    if (s.mover() == human) {
      std::cout << to_string(human) << "> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) return 0;
      const auto w = words(line);
      if (w.empty()) continue;
      if (w[0] == "quit") return 0;
      try {
        shift = parse_shift(w[0]);
        s = rab_step(s, shift);
      } catch (const std::exception& e) {
        std::cout << "illegal: " << e.what() << '\n';
      }
      continue;
    }
    shift = opponent->move(config, s);
    std::cout << to_string(other(human)) << " plays " << to_string(shift) << '\n';
    try {
      s = rab_step(s, shift);
    } catch (const RuleViolation& e) {
      std::cout << to_string(other(human)) << " forfeits: " << e.what() << '\n';
      return 0;
    }
  }
  std::cout << harness::render_board(s.red, s.token, side, side) << "loser: " << to_string(*s.loser) << '\n';
  return 0;
}

std::optional<DeclAction> parse_decl_command(const std::vector<std::string>& w, Player who) {
  if (w.empty()) return std::nullopt;
  DeclAction a;
  if (w[0] == "pass") return a;
  if (w[0] == "close") {
    a.close_declarations = true;
    return a;
  }
  std::size_t i = 0;
  if (who == Player::Alice && w[0] == "declare") {
    std::string cells;
    for (i = 1; i < w.size() && w[i] != "up" && w[i] != "right" && w[i] != "u" && w[i] != "r"; ++i) {
      cells += w[i] + ' ';
    }
    a.declare = parse_cells(cells);
    if (i == w.size()) return a;
  }
  a.shift = parse_shift(w[i]);
  a.shifts = 1;
  if (who == Player::Bob && i + 1 < w.size()) a.shifts = std::stoll(w[i + 1]);
  return a;
}

int interactive_decl(const DeclGameConfig& config, Player human, const std::string& opponent_name) {
  auto opponent = human == Player::Alice ? decl_bob(opponent_name, config) : decl_alice(opponent_name, config);
  const oracle::MicroWindow win = oracle::minimal_window(config);
  const std::int64_t width = std::min<std::int64_t>(win.width, 60), height = std::min<std::int64_t>(win.height, 30);
  DeclGameState s = decl_new_game(config);
  while (!s.finished) {
    std::optional<staircase::StaircaseId> stair;
    if (auto* sb = dynamic_cast<staircase::StaircaseBob*>(opponent.get()); sb && sb->anchored()) stair = sb->current();
    std::cout << harness::render_board(s.red, s.token, width, height, stair) << "turn " << s.turn + 1 << ", "
              << to_string(s.to_move) << " to move; declarations " << s.declarations_used << "/" << config.p << '\n';
    if (s.to_move == human) {
      std::cout << (human == Player::Alice ? "alice (pass | up | right | declare CELLS [up|right] | close | quit)> "
                                           : "bob (pass | up N | right N | diagonal N | quit)> ")
                << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) return 0;
      const auto w = words(line);
      if (!w.empty() && w[0] == "quit") return 0;
      try {
        auto a = parse_decl_command(w, human);
        if (!a) continue;
        s = decl_apply(config, s, human, *a);
      } catch (const std::exception& e) {
        std::cout << "illegal: " << e.what() << '\n';
      }
      continue;
    }
    const DeclAction a = opponent->act(config, s);
    try {
      s = decl_apply(config, s, other(human), a);
    } catch (const RuleViolation& e) {
      std::cout << to_string(other(human)) << " forfeits: " << e.what() << '\n';
      return 0;
    }
  }
  std::cout << harness::render_board(s.red, s.token, width, height) << "winner: " << to_string(decl_winner(s)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token games on the grid: engines, strategies, oracles and audits"};
  app.require_subcommand(1);

  // play
  auto* play = app.add_subcommand("play", "run one game");
  std::string game = "rab";
  std::int64_t r = 0, a = 0, b = 0;
  std::string alice_name, bob_name, transcript_path, audit_path;
  DeclFlags decl;
  play->add_option("--game", game, "rab or decl")->check(CLI::IsMember({"rab", "decl"}));
  play->add_option("--r", r, "red-set size bound (rab) or cells per declaration (decl)");
  play->add_option("--a", a, "Alice's budget (rab)")->check(CLI::NonNegativeNumber);
  play->add_option("--b", b, "Bob's budget (rab)")->check(CLI::NonNegativeNumber);
  play->add_option("--alice", alice_name, "Alice's strategy");
  play->add_option("--bob", bob_name, "Bob's strategy");
  play->add_option("--transcript", transcript_path, "write the JSONL transcript here");
  play->add_option("--audit", audit_path, "decl: write the staircase ledger audit here");
  add_decl_flags(play, decl);

  // verify-thm7
  auto* verify = app.add_subcommand("verify-thm7", "compare the winner formula with the exhaustive solver");
  std::int64_t max_sum = 5, max_r = 8;
  int jobs = 0;
  std::uint64_t cap = oracle::SolveOptions{}.cap;
  std::string out_path;
  verify->add_option("--max-sum", max_sum, "largest a+b")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-r", max_r, "largest r")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs, "worker threads (0: $GRIDGAMES_JOBS or all cores)");
  verify->add_option("--cap", cap, "red-set enumeration cap per triple");
  verify->add_option("--out", out_path, "write the JSONL report here");

  // solve
  auto* solve = app.add_subcommand("solve", "one oracle query");
  std::string red_text;
  solve->add_option("--game", game, "rab or decl")->check(CLI::IsMember({"rab", "decl"}));
  solve->add_option("--r", r, "red-set size bound (rab) or cells per declaration (decl)");
  solve->add_option("--a", a, "Alice's budget (rab)")->check(CLI::NonNegativeNumber);
  solve->add_option("--b", b, "Bob's budget (rab)")->check(CLI::NonNegativeNumber);
  solve->add_option("--red", red_text, "rab: solve for this fixed red set, e.g. \"0,0 1,1\"");
  solve->add_option("--jobs", jobs, "worker threads");
  solve->add_option("--cap", cap, "enumeration cap");
  add_decl_flags(solve, decl);

  // audit
  auto* audit = app.add_subcommand("audit", "exact budget audit of a theorem regime");
  std::string theorem = "2";
  std::int64_t n = 0, c = 0, d = 0, e = 0;
  audit->add_option("--theorem", theorem, "2, 3, 4 or 5")->required();
  audit->add_option("--n", n, "n")->required();
  audit->add_option("--c", c, "c");
  audit->add_option("--d", d, "d (default: minimal)");
  audit->add_option("--e", e, "e (default: minimal)");
  audit->add_option("--out", out_path, "write the JSON record here");

  // sfamily
  auto* sfam = app.add_subcommand("sfamily", "greedy separated family of pairs (n, n+c)");
  std::int64_t sep = 1, count = 10;
  sfam->add_option("--d", sep, "separation")->check(CLI::PositiveNumber);
  sfam->add_option("--count", count, "number of pairs")->check(CLI::NonNegativeNumber);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "parameter grid to CSV");
  std::map<std::string, std::string> ranges{{"r", "1"},     {"a", "0"},       {"b", "0"},     {"a-up", "0"},
                                            {"a-right", "0"}, {"bob-1", "0"}, {"bob-2", "0"}, {"p", "1"},
                                            {"f", "1"}};
  std::string variant = "lemma1", adversary = "chaser";
  std::int64_t seeds = 1;
  std::uint64_t seed = 0;
  bool with_oracle = false;
  sweep->add_option("--game", game, "rab or decl")->check(CLI::IsMember({"rab", "decl"}));
  for (auto& [key, value] : ranges) sweep->add_option("--" + key, value, "value or lo:hi");
  sweep->add_option("--variant", variant, "decl variant")->check(CLI::IsMember({"lemma1", "lemma2"}));
  sweep->add_option("--adversary", adversary, "decl: Alice adversary");
  sweep->add_option("--seeds", seeds, "decl: seeds per configuration")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "rab: opponent seed");
  sweep->add_flag("--oracle", with_oracle, "rab: include the exhaustive solver");
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--out", out_path, "write the CSV here");

  // interactive
  auto* inter = app.add_subcommand("interactive", "play at a prompt against a strategy");
  std::string as = "alice", opponent;
  inter->add_option("--game", game, "rab or decl")->check(CLI::IsMember({"rab", "decl"}));
  inter->add_option("--as", as, "alice or bob")->check(CLI::IsMember({"alice", "bob"}));
  inter->add_option("--opponent", opponent, "opponent strategy");
  inter->add_option("--r", r, "red-set size bound (rab) or cells per declaration (decl)");
  inter->add_option("--a", a, "Alice's budget (rab)")->check(CLI::NonNegativeNumber);
  inter->add_option("--b", b, "Bob's budget (rab)")->check(CLI::NonNegativeNumber);
  add_decl_flags(inter, decl);

  CLI11_PARSE(app, argc, argv);

  try {
    if (play->parsed()) {
      if (game == "rab") {
        const RabGameConfig config{r, a, b};
        config.validate();
        auto alice = rab::make_rab_strategy(alice_name.empty() ? "kite" : alice_name, Player::Alice, config, false);
        auto bob = rab::make_rab_strategy(bob_name.empty() ? "recursive" : bob_name, Player::Bob, config, false);
        const RabTranscript t = rab_play(config, *alice, *bob);
        std::cout << outcome_line(t.outcome) << '\n';
        if (!transcript_path.empty()) {
          std::ofstream f;
          write_jsonl(open_out(transcript_path, f), t);
        }
        return 0;
      }
      decl.r = r > 0 ? r : 1;
      const DeclGameConfig config = decl_config(decl);
      auto alice = decl_alice(alice_name.empty() ? "chaser" : alice_name, config);
      auto bob = decl_bob(bob_name.empty() ? "staircase" : bob_name, config);
      const DeclTranscript t = decl_play(config, *alice, *bob, 2 * decl_min_round_cap(config));
      std::cout << outcome_line(t.outcome) << '\n';
      if (!transcript_path.empty()) {
        std::ofstream f;
        write_jsonl(open_out(transcript_path, f), t);
      }
      if (auto* sb = dynamic_cast<staircase::StaircaseBob*>(bob.get()); sb && !audit_path.empty()) {
        std::ofstream f;
        open_out(audit_path, f) << staircase::audit_to_jsonl(staircase::audit_ledger(sb->ledger(), config, t));
      }
      return 0;
    }

    if (verify->parsed()) {
      oracle::SolveOptions opts;
      opts.cap = cap;
      opts.jobs = jobs;
      const auto start = std::chrono::steady_clock::now();
      const oracle::Thm7Report rep = oracle::verify_theorem7(max_sum, max_r, opts);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (!out_path.empty()) {
        std::ofstream f;
        open_out(out_path, f) << oracle::thm7_to_jsonl(rep);
      }
      std::cout << "triples " << rep.entries.size() << ", mismatches " << rep.mismatches << ", " << secs
                << " s with " << resolve_jobs(jobs) << " workers\n";
      for (const auto& en : rep.entries) {
        if (en.predicted != en.solved) {
          std::cout << "mismatch r=" << en.r << " a=" << en.a << " b=" << en.b << ": formula "
                    << to_string(en.predicted) << ", solver " << to_string(en.solved) << '\n';
        }
      }
      return rep.mismatches == 0 ? 0 : kMismatch;
    }

    if (solve->parsed()) {
      if (game == "rab") {
        if (!red_text.empty()) {
          const CellSet red = parse_cells(red_text);
          std::cout << "winner: " << to_string(oracle::solve_fixed_R(red, a, b)) << '\n';
          return 0;
        }
        oracle::SolveOptions opts;
        opts.cap = cap;
        opts.jobs = jobs;
        const oracle::RabSolution sol = oracle::solve_rab(r, a, b, opts);
        std::cout << "winner: " << to_string(sol.winner) << "\npredicted: "
                  << to_string(rab::rab_winner_predicate(r, a, b)) << "\nexamined: " << sol.examined << '\n';
        if (sol.witness) std::cout << "witness: " << to_string(*sol.witness) << '\n';
        return 0;
      }
      decl.r = r > 0 ? r : 1;
      const DeclGameConfig config = decl_config(decl);
      std::cout << "winner: " << to_string(oracle::solve_decl_micro(config, oracle::minimal_window(config))) << '\n';
      return 0;
    }

    if (audit->parsed()) {
      const harness::Theorem th = harness::parse_theorem(theorem);
      harness::RegimeAudit rep = harness::audit_parameters(th, n, c, d > 0 ? d : 1, e > 0 ? e : 1);
      if ((d == 0 || e == 0) && rep.minimal_de) {
        rep = harness::audit_parameters(th, n, c, d > 0 ? d : rep.minimal_de->first, e > 0 ? e : rep.minimal_de->second);
      }
      std::ofstream f;
      open_out(out_path, f) << harness::audit_to_json(rep) << '\n';
      if (!out_path.empty()) std::cout << "verdict: " << (rep.condition.holds ? "condition holds" : "condition fails") << '\n';
      return 0;
    }

    if (sfam->parsed()) {
      const harness::SFamily fam = harness::build_s_family(sep, count);
      for (std::size_t i = 0; i < fam.pairs.size(); ++i) {
        std::cout << (i ? " " : "") << '(' << fam.pairs[i].n << ',' << fam.pairs[i].second() << ')';
      }
      std::cout << '\n';
      return 0;
    }

    if (sweep->parsed()) {
      std::string csv;
      if (game == "rab") {
        harness::RabSweepSpec spec;
        spec.r = harness::parse_range(ranges["r"]);
        spec.a = harness::parse_range(ranges["a"]);
        spec.b = harness::parse_range(ranges["b"]);
        spec.solve = with_oracle;
        spec.seed = seed;
        spec.jobs = jobs;
        csv = harness::rab_sweep_csv(spec);
      } else {
        harness::DeclSweepSpec spec;
        spec.variant = variant == "lemma2" ? DeclVariant::Lemma2 : DeclVariant::Lemma1;
        spec.a_up = harness::parse_range(ranges["a-up"]);
        spec.a_right = harness::parse_range(ranges["a-right"]);
        spec.bob_1 = harness::parse_range(ranges["bob-1"]);
        spec.bob_2 = harness::parse_range(ranges["bob-2"]);
        spec.r = harness::parse_range(ranges["r"]);
        spec.p = harness::parse_range(ranges["p"]);
        spec.f = harness::parse_range(ranges["f"]);
        spec.adversary = adversary;
        spec.seeds = seeds;
        spec.jobs = jobs;
        csv = harness::decl_sweep_csv(spec);
      }
      std::ofstream f;
      open_out(out_path, f) << csv;
      return 0;
    }

    if (inter->parsed()) {
      const Player human = parse_player(as);
      if (game == "rab") {
        const RabGameConfig config{r, a, b};
        config.validate();
        const std::string def = human == Player::Alice ? "recursive" : "kite";
        return interactive_rab(config, human, opponent.empty() ? def : opponent);
      }
      decl.r = r > 0 ? r : 1;
      const DeclGameConfig config = decl_config(decl);
      const std::string def = human == Player::Alice ? "staircase" : "chaser";
      return interactive_decl(config, human, opponent.empty() ? def : opponent);
    }
  } catch (const CapExceeded& ex) {
    std::cerr << "cap exceeded: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return 0;
}
