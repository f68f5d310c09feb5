#include "gridgames/transcript.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gridgames/errors.hpp"

namespace gridgames {

using nlohmann::json;

namespace {

json cell_json(Cell c) { return json::array({c.x, c.y}); }

Cell cell_from(const json& j) { return Cell{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

json cells_json(const CellSet& cells) {
  json arr = json::array();
  for (const Cell& c : cells) arr.push_back(cell_json(c));
  return arr;
}

CellSet cells_from(const json& j) {
  CellSet out;
  for (const auto& c : j) out.insert(cell_from(c));
  return out;
}

json outcome_json(const Outcome& o) {
  json j = {{"type", "outcome"}, {"winner", to_string(o.winner)}, {"reason", o.reason}};
  j["forfeit_by"] = o.forfeit_by ? json(to_string(*o.forfeit_by)) : json(nullptr);
  j["detail"] = o.detail;
  return j;
}

Outcome outcome_from(const json& j) {
  Outcome o;
  o.winner = parse_player(j.at("winner").get<std::string>());
  o.reason = j.at("reason").get<std::string>();
  if (!j.at("forfeit_by").is_null()) o.forfeit_by = parse_player(j.at("forfeit_by").get<std::string>());
  o.detail = j.value("detail", "");
  return o;
}

json decl_config_json(const DeclGameConfig& c) {
  json j = {{"variant", c.variant == DeclVariant::Lemma1 ? "lemma1" : "lemma2"},
            {"a_up", c.a_up},
            {"a_right", c.a_right},
            {"bob_budget_1", c.bob_budget_1},
            {"bob_budget_2", c.bob_budget_2},
            {"r", c.r},
            {"p", c.p},
            {"f", c.f}};
  if (c.mode.kind == DeclarationMode::Kind::FunctionGraph) {
    j["mode"] = {{"kind", "function_graph"}, {"width", c.mode.width}, {"height", c.mode.height}};
  } else {
    j["mode"] = {{"kind", "arbitrary"}};
  }
  return j;
}

DeclGameConfig decl_config_from(const json& j) {
  DeclGameConfig c;
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "lemma1") {
    c.variant = DeclVariant::Lemma1;
  } else if (variant == "lemma2") {
    c.variant = DeclVariant::Lemma2;
  } else {
    throw std::runtime_error("unknown variant '" + variant + "'");
  }
  c.a_up = j.at("a_up").get<std::int64_t>();
  c.a_right = j.at("a_right").get<std::int64_t>();
  c.bob_budget_1 = j.at("bob_budget_1").get<std::int64_t>();
  c.bob_budget_2 = j.at("bob_budget_2").get<std::int64_t>();
  c.r = j.at("r").get<std::int64_t>();
  c.p = j.at("p").get<std::int64_t>();
  c.f = j.at("f").get<std::int64_t>();
  const json& mode = j.at("mode");
  if (mode.at("kind").get<std::string>() == "function_graph") {
    c.mode = DeclarationMode::function_graph(mode.at("width").get<std::int64_t>(),
                                             mode.at("height").get<std::int64_t>());
  }
  return c;
}

json action_json(const DeclAction& a) {
  json j = json::object();
  if (a.declare) j["declare"] = cells_json(*a.declare);
  if (a.shifts > 0) {
    j["shift"] = to_string(a.shift);
    j["count"] = a.shifts;
  }
  if (a.close_declarations) j["close"] = true;
  return j;
}

DeclAction action_from(const json& j) {
  DeclAction a;
  if (j.contains("declare")) a.declare = cells_from(j.at("declare"));
  if (j.contains("shift")) {
    a.shift = parse_shift(j.at("shift").get<std::string>());
    a.shifts = j.at("count").get<std::int64_t>();
  }
  a.close_declarations = j.value("close", false);
  return a;
}

json snapshot_json(const DeclSnapshot& s) {
  return {{"alice_up", s.alice_up_used},
          {"alice_right", s.alice_right_used},
          {"bob_1", s.bob_used_1},
          {"bob_2", s.bob_used_2},
          {"declarations", s.declarations_used},
          {"passes", s.consecutive_passes},
          {"red", s.red_size},
          {"closed", s.declarations_closed},
          {"finished", s.finished}};
}

DeclSnapshot snapshot_from(const json& token, const json& j) {
  DeclSnapshot s;
  s.token = cell_from(token);
  s.alice_up_used = j.at("alice_up").get<std::int64_t>();
  s.alice_right_used = j.at("alice_right").get<std::int64_t>();
  s.bob_used_1 = j.at("bob_1").get<std::int64_t>();
  s.bob_used_2 = j.at("bob_2").get<std::int64_t>();
  s.declarations_used = j.at("declarations").get<std::int64_t>();
  s.consecutive_passes = j.at("passes").get<std::int64_t>();
  s.red_size = j.at("red").get<std::int64_t>();
  s.declarations_closed = j.at("closed").get<bool>();
  s.finished = j.at("finished").get<bool>();
  return s;
}

std::vector<json> read_lines(std::istream& in) {
  std::vector<json> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    lines.push_back(json::parse(line));
  }
  if (lines.size() < 2) throw std::runtime_error("transcript needs a header and an outcome line");
  if (lines.front().at("type") != "header") throw std::runtime_error("first transcript line is not a header");
  if (lines.back().at("type") != "outcome") throw std::runtime_error("last transcript line is not an outcome");
  return lines;
}

}  // namespace

void write_jsonl(std::ostream& out, const DeclTranscript& t) {
  json header = {{"type", "header"}, {"game", "decl"}, {"config", decl_config_json(t.config)},
                 {"alice", t.alice}, {"bob", t.bob}};
  out << header.dump() << '\n';
  for (const DeclEvent& e : t.events) {
    json ev = {{"type", "event"},
               {"turn", e.turn},
               {"player", to_string(e.player)},
               {"action", action_json(e.action)},
               {"token", cell_json(e.after.token)},
               {"counters", snapshot_json(e.after)}};
    out << ev.dump() << '\n';
  }
  out << outcome_json(t.outcome).dump() << '\n';
}

void write_jsonl(std::ostream& out, const RabTranscript& t) {
  json header = {{"type", "header"},
                 {"game", "rab"},
                 {"config", {{"r", t.config.r}, {"a", t.config.a}, {"b", t.config.b}}},
                 {"alice", t.alice},
                 {"bob", t.bob},
                 {"red", cells_json(t.red)}};
  out << header.dump() << '\n';
  for (const RabEvent& e : t.events) {
    json ev = {{"type", "event"},
               {"step", e.step},
               {"player", to_string(e.player)},
               {"action", {{"shift", to_string(e.shift)}}},
               {"token", cell_json(e.token)},
               {"counters", {{"a_left", e.a_left}, {"b_left", e.b_left}}}};
    out << ev.dump() << '\n';
  }
  out << outcome_json(t.outcome).dump() << '\n';
}

std::string to_jsonl(const DeclTranscript& t) {
  std::ostringstream os;
  write_jsonl(os, t);
  return os.str();
}

std::string to_jsonl(const RabTranscript& t) {
  std::ostringstream os;
  write_jsonl(os, t);
  return os.str();
}

DeclTranscript read_decl_jsonl(std::istream& in) {
  const std::vector<json> lines = read_lines(in);
  const json& header = lines.front();
  if (header.at("game") != "decl") throw std::runtime_error("not a declaration-game transcript");
  DeclTranscript t;
  t.config = decl_config_from(header.at("config"));
  t.alice = header.at("alice").get<std::string>();
  t.bob = header.at("bob").get<std::string>();
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const json& ev = lines[i];
    DeclEvent e;
    e.turn = ev.at("turn").get<std::int64_t>();
    e.player = parse_player(ev.at("player").get<std::string>());
    e.action = action_from(ev.at("action"));
    e.after = snapshot_from(ev.at("token"), ev.at("counters"));
    t.events.push_back(std::move(e));
  }
  t.outcome = outcome_from(lines.back());
  t.final_state = replay(t);
  return t;
}

RabTranscript read_rab_jsonl(std::istream& in) {
  const std::vector<json> lines = read_lines(in);
  const json& header = lines.front();
  if (header.at("game") != "rab") throw std::runtime_error("not an (r,a,b)-game transcript");
  RabTranscript t;
  const json& cfg = header.at("config");
  t.config = {cfg.at("r").get<std::int64_t>(), cfg.at("a").get<std::int64_t>(), cfg.at("b").get<std::int64_t>()};
  t.alice = header.at("alice").get<std::string>();
  t.bob = header.at("bob").get<std::string>();
  t.red = cells_from(header.at("red"));
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const json& ev = lines[i];
    RabEvent e;
    e.step = ev.at("step").get<std::int64_t>();
    e.player = parse_player(ev.at("player").get<std::string>());
    e.shift = parse_shift(ev.at("action").at("shift").get<std::string>());
    e.token = cell_from(ev.at("token"));
    e.a_left = ev.at("counters").at("a_left").get<std::int64_t>();
    e.b_left = ev.at("counters").at("b_left").get<std::int64_t>();
    t.events.push_back(e);
  }
  t.outcome = outcome_from(lines.back());
  t.final_state = replay(t);
  return t;
}

DeclGameState replay(const DeclTranscript& t) {
  DeclGameState state = decl_new_game(t.config);
  for (const DeclEvent& e : t.events) {
    state = decl_apply(t.config, state, e.player, e.action);
    if (state.turn != e.turn || !(DeclSnapshot::of(state) == e.after)) {
      throw std::runtime_error("replay diverges at turn " + std::to_string(e.turn));
    }
  }
  if (t.outcome.reason == "limit") {
    if (!state.finished || decl_winner(state) != t.outcome.winner) {
      throw std::runtime_error("replayed final state does not match the recorded outcome");
    }
  } else if (t.outcome.reason == "round_cap") {
    const Player w = state.red.contains(state.token) ? Player::Alice : Player::Bob;
    if (state.finished || w != t.outcome.winner) {
      throw std::runtime_error("replayed final state does not match the recorded outcome");
    }
  } else if (t.outcome.reason != "forfeit") {
    throw std::runtime_error("unknown outcome reason '" + t.outcome.reason + "'");
  }
  return state;
}

RabGameState replay(const RabTranscript& t) {
  RabGameState state;
  try {
    state = rab_new_game(t.config, t.red);
  } catch (const PreconditionError&) {
    if (t.outcome.reason != "forfeit" || t.outcome.forfeit_by != Player::Alice || !t.events.empty()) throw;
    state.a_left = t.config.a;
    state.b_left = t.config.b;
    return state;
  }
  for (const RabEvent& e : t.events) {
    const Player mover = state.mover();
    if (mover != e.player) throw std::runtime_error("event " + std::to_string(e.step) + " has the wrong mover");
    state = rab_step(state, e.shift);
    if (state.token != e.token || state.a_left != e.a_left || state.b_left != e.b_left) {
      throw std::runtime_error("replay diverges at step " + std::to_string(e.step));
    }
  }
  if (t.outcome.reason == "budget") {
    if (!state.finished || other(*state.loser) != t.outcome.winner) {
      throw std::runtime_error("replayed final state does not match the recorded outcome");
    }
  } else if (t.outcome.reason != "forfeit") {
    throw std::runtime_error("unknown outcome reason '" + t.outcome.reason + "'");
  }
  return state;
}

}  // namespace gridgames
