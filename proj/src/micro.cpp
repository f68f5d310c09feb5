#include "gridgames/micro.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "gridgames/errors.hpp"

namespace gridgames::oracle {

namespace {

constexpr std::int64_t kMaxCounter = 255;

std::int64_t max_dx(const DeclGameConfig& c) {
  return c.a_right + c.bob_budget_2 + (c.variant == DeclVariant::Lemma2 ? c.bob_budget_1 : 0);
}
std::int64_t max_dy(const DeclGameConfig& c) { return c.a_up + c.bob_budget_1; }

void check_window(const DeclGameConfig& config, MicroWindow w) {
  config.validate();
  const MicroWindow need = minimal_window(config);
  if (w.width < need.width || w.height < need.height) {
    throw PreconditionError("window " + std::to_string(w.width) + "x" + std::to_string(w.height) +
                            " misses reachable cells; need at least " + std::to_string(need.width) + "x" +
                            std::to_string(need.height));
  }
  if (w.width * w.height > 64) throw PreconditionError("micro windows hold at most 64 cells");
  for (std::int64_t v : {config.a_up, config.a_right, config.bob_budget_1, config.bob_budget_2, config.p}) {
    if (v > kMaxCounter) throw PreconditionError("micro budgets are limited to 255");
  }
}

// Alice's option: shift -1 (none), or an index into {Up, Right}; plus an
// optional declaration mask.
struct AliceOption {
  int shift = -1;
  bool declare = false;
  std::uint64_t mask = 0;
};

void combinations(const std::vector<int>& items, std::size_t k, const std::function<void(std::uint64_t)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > items.size()) return;
  while (true) {
    std::uint64_t m = 0;
    for (std::size_t i : idx) m |= 1ULL << items[i];
    fn(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MicroWindow minimal_window(const DeclGameConfig& config) { return {max_dx(config) + 1, max_dy(config) + 1}; }

DeclMicroSolver::DeclMicroSolver(const DeclGameConfig& config, MicroWindow window, MicroOptions options)
    : config_(config), window_(window), options_(options) {
  check_window(config, window);
}

DeclMicroSolver::Node DeclMicroSolver::node_of(const DeclGameState& s) const {
  Node n;
  for (const Cell& c : s.red) {
    if (c.x < window_.width && c.y < window_.height) n.red |= 1ULL << (c.y * window_.width + c.x);
  }
  n.x = static_cast<std::int16_t>(s.token.x);
  n.y = static_cast<std::int16_t>(s.token.y);
  n.au = static_cast<std::int16_t>(s.alice_up_used);
  n.ar = static_cast<std::int16_t>(s.alice_right_used);
  n.b1 = static_cast<std::int16_t>(s.bob_used_1);
  n.b2 = static_cast<std::int16_t>(s.bob_used_2);
  n.decl = static_cast<std::int16_t>(s.declarations_closed ? config_.p : s.declarations_used);
  n.last_pass = s.consecutive_passes > 0;
  n.alice = s.to_move == Player::Alice;
  return n;
}

DeclMicroSolver::Key DeclMicroSolver::key_of(const Node& n) const {
  std::uint64_t p = 0;
  for (std::int64_t v : {n.x, n.y, n.au, n.ar, n.b1, n.b2, n.decl}) p = (p << 8) | static_cast<std::uint64_t>(v);
  p = (p << 2) | (n.last_pass ? 1 : 0) | (n.alice ? 2 : 0);
  return {n.red, p};
}

std::uint64_t DeclMicroSolver::reach_mask(const Node& n) const {
  const std::int64_t rb1 = config_.bob_budget_1 - n.b1;
  const std::int64_t dx = (config_.a_right - n.ar) + (config_.bob_budget_2 - n.b2) +
                          (config_.variant == DeclVariant::Lemma2 ? rb1 : 0);
  const std::int64_t dy = (config_.a_up - n.au) + rb1;
  std::uint64_t m = 0;
  for (std::int64_t v = n.y; v <= std::min(window_.height - 1, n.y + dy); ++v) {
    for (std::int64_t u = n.x; u <= std::min(window_.width - 1, n.x + dx); ++u) m |= 1ULL << (v * window_.width + u);
  }
  return m;
}

bool DeclMicroSolver::red_at(const Node& n) const { return (n.red >> (n.y * window_.width + n.x)) & 1ULL; }

std::vector<std::uint64_t> DeclMicroSolver::declarations(const Node& m) const {
  std::vector<std::uint64_t> out;
  std::uint64_t avail = reach_mask(m) & ~m.red;
  const bool graph = config_.mode.kind == DeclarationMode::Kind::FunctionGraph;
  std::map<int, std::vector<int>> columns;
  std::vector<int> cells;
  for (std::uint64_t a = avail; a; a &= a - 1) {
    const int i = std::countr_zero(a);
    const int x = i % static_cast<int>(window_.width), y = i / static_cast<int>(window_.width);
    if (graph && (x >= config_.mode.width || y >= config_.mode.height)) continue;
    cells.push_back(i);
    columns[x].push_back(i);
  }
  if (cells.empty()) return out;
  if (!graph) {
    const auto k = static_cast<std::size_t>(std::min<std::int64_t>(config_.r, static_cast<std::int64_t>(cells.size())));
    combinations(cells, k, [&](std::uint64_t mask) { out.push_back(mask); });
    return out;
  }
  std::vector<int> cols;
  for (const auto& [x, v] : columns) cols.push_back(x);
  const auto k = static_cast<std::size_t>(std::min<std::int64_t>(config_.r, static_cast<std::int64_t>(cols.size())));
  // Choose k columns, then one cell in each.
  std::vector<int> positions(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) positions[i] = static_cast<int>(i);
  combinations(positions, k, [&](std::uint64_t chosen) {
    std::vector<const std::vector<int>*> pick;
    for (std::uint64_t c = chosen; c; c &= c - 1) pick.push_back(&columns[cols[static_cast<std::size_t>(std::countr_zero(c))]]);
    std::vector<std::size_t> at(pick.size(), 0);
    while (true) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < pick.size(); ++i) mask |= 1ULL << (*pick[i])[at[i]];
      out.push_back(mask);
      std::size_t i = 0;
      while (i < pick.size() && ++at[i] == pick[i]->size()) at[i++] = 0;
      if (i == pick.size()) break;
    }
  });
  return out;
}

namespace {

std::vector<AliceOption> alice_options(const DeclGameConfig& c, const DeclMicroSolver::Node& n,
                                       const std::function<std::vector<std::uint64_t>(const DeclMicroSolver::Node&)>& decls,
                                       DeclMicroSolver::Node* shifted_nodes) {
  std::vector<AliceOption> out;
  for (int s : {0, 1, -1}) {
    DeclMicroSolver::Node m = n;
    if (s == 0) {
      if (n.au >= c.a_up) continue;
      ++m.au;
      ++m.y;
    } else if (s == 1) {
      if (n.ar >= c.a_right) continue;
      ++m.ar;
      ++m.x;
    }
    shifted_nodes[s + 1] = m;
    if (n.decl < c.p) {
      for (std::uint64_t mask : decls(m)) out.push_back({s, true, mask});
    }
    out.push_back({s, false, 0});
  }
  return out;
}

}  // namespace

bool DeclMicroSolver::alice_wins(Node n) {
  n.red &= reach_mask(n);
  const Key key = key_of(n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= options_.state_cap) {
    throw CapExceeded("micro solver exceeded " + std::to_string(options_.state_cap) + " positions");
  }
  bool result = false;
  if (n.alice) {
    Node shifted_nodes[3];
    const auto opts = alice_options(config_, n, [this](const Node& m) { return declarations(m); }, shifted_nodes);
    for (const AliceOption& o : opts) {
      Node child = shifted_nodes[o.shift + 1];
      child.alice = false;
      const bool pass = o.shift < 0 && !o.declare;
      if (pass && n.last_pass) {
        result = red_at(n);
      } else {
        child.last_pass = pass;
        if (o.declare) {
          child.red |= o.mask;
          ++child.decl;
        }
        result = alice_wins(child);
      }
      if (result) break;
    }
  } else {
    result = true;
    if (n.last_pass) {
      result = red_at(n);
    } else {
      Node child = n;
      child.alice = true;
      child.last_pass = true;
      result = alice_wins(child);
    }
    const bool l2 = config_.variant == DeclVariant::Lemma2;
    for (std::int64_t k = 1; result && k <= config_.bob_budget_1 - n.b1; ++k) {
      Node child = n;
      child.alice = true;
      child.last_pass = false;
      child.b1 = static_cast<std::int16_t>(n.b1 + k);
      child.y = static_cast<std::int16_t>(n.y + k);
      if (l2) child.x = static_cast<std::int16_t>(n.x + k);
      result = alice_wins(child);
    }
    for (std::int64_t k = 1; result && k <= config_.bob_budget_2 - n.b2; ++k) {
      Node child = n;
      child.alice = true;
      child.last_pass = false;
      child.b2 = static_cast<std::int16_t>(n.b2 + k);
      child.x = static_cast<std::int16_t>(n.x + k);
      result = alice_wins(child);
    }
  }
  memo_.emplace(key, result);
  return result;
}

Player DeclMicroSolver::winner(const DeclGameState& state) {
  if (state.finished) return decl_winner(state);
  return alice_wins(node_of(state)) ? Player::Alice : Player::Bob;
}

std::vector<DeclAction> DeclMicroSolver::alice_candidates(const DeclGameState& state) const {
  const Node n = node_of(state);
  Node shifted_nodes[3];
  const auto opts = alice_options(config_, n, [this](const Node& m) { return declarations(m); }, shifted_nodes);
  std::vector<DeclAction> out;
  for (const AliceOption& o : opts) {
    DeclAction a;
    if (o.shift >= 0) {
      a.shift = o.shift == 0 ? Shift::Up : Shift::Right;
      a.shifts = 1;
    }
    if (o.declare) {
      CellSet cells;
      for (std::uint64_t m = o.mask; m; m &= m - 1) {
        const int i = std::countr_zero(m);
        cells.insert({i % window_.width, i / window_.width});
      }
      a.declare = std::move(cells);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::optional<DeclAction> DeclMicroSolver::winning_action(const DeclGameState& state) {
  if (state.finished || state.to_move != Player::Alice) return std::nullopt;
  for (const DeclAction& a : alice_candidates(state)) {
    if (a.is_pass() && state.consecutive_passes > 0) {
      if (state.red.contains(state.token)) return a;
      continue;
    }
    if (winner(decl_apply(config_, state, Player::Alice, a)) == Player::Alice) return a;
  }
  return std::nullopt;
}

Player solve_decl_micro(const DeclGameConfig& config, MicroWindow window, MicroOptions options) {
  DeclMicroSolver solver(config, window, options);
  return solver.winner(decl_new_game(config));
}

namespace {

struct CertKey {
  std::uint64_t red;
  std::uint64_t packed;
  std::vector<std::int64_t> memory;
  bool operator==(const CertKey&) const = default;
};

struct CertKeyHash {
  std::size_t operator()(const CertKey& k) const noexcept {
    std::size_t h = 0;
    boost::hash_combine(h, k.red);
    boost::hash_combine(h, k.packed);
    boost::hash_range(h, k.memory.begin(), k.memory.end());
    return h;
  }
};

class Certifier {
 public:
  Certifier(const DeclGameConfig& c, MicroWindow w, MicroOptions o) : config_(c), window_(w), options_(o) {}

  MicroCertificate run(const DeclStrategy& bob) {
    MicroCertificate cert;
    cert.bob_wins_all = explore(decl_new_game(config_), bob);
    cert.positions = visited_.size();
    cert.terminals = terminals_;
    cert.counterexample = counterexample_;
    return cert;
  }

 private:
  CertKey key_of(const DeclGameState& s, const DeclStrategy& bob) const {
    CertKey k;
    k.red = 0;
    for (const Cell& c : s.red) {
      if (dominates(c, s.token)) k.red |= 1ULL << (c.y * window_.width + c.x);
    }
    std::uint64_t p = 0;
    for (std::int64_t v : {s.token.x, s.token.y, s.alice_up_used, s.alice_right_used, s.bob_used_1, s.bob_used_2,
                           s.declarations_used}) {
      p = (p << 8) | static_cast<std::uint64_t>(v);
    }
    p = (p << 4) | static_cast<std::uint64_t>(std::min<std::int64_t>(s.consecutive_passes, 2)) |
        (s.declarations_closed ? 4 : 0) | (s.to_move == Player::Alice ? 8 : 0);
    k.packed = p;
    k.memory = bob.memory();
    return k;
  }

  bool terminal(const DeclGameState& s) {
    ++terminals_;
    if (!s.red.contains(s.token)) return true;
    if (!counterexample_) counterexample_ = path_;
    return false;
  }

  std::vector<DeclAction> alice_actions(const DeclGameState& s) const {
    std::vector<DeclAction> out;
    const bool graph = config_.mode.kind == DeclarationMode::Kind::FunctionGraph;
    for (int si : {-1, 0, 1}) {
      Cell t = s.token;
      DeclAction base;
      if (si == 0) {
        if (s.alice_up_used >= config_.a_up) continue;
        base = DeclAction::move(Shift::Up);
        ++t.y;
      } else if (si == 1) {
        if (s.alice_right_used >= config_.a_right) continue;
        base = DeclAction::move(Shift::Right);
        ++t.x;
      }
      out.push_back(base);
      if (s.declarations_closed || s.declarations_used >= config_.p) continue;
      std::vector<Cell> white;
      for (std::int64_t y = t.y; y < window_.height; ++y) {
        for (std::int64_t x = t.x; x < window_.width; ++x) {
          if (graph && (x >= config_.mode.width || y >= config_.mode.height)) continue;
          if (!s.red.contains({x, y})) white.push_back({x, y});
        }
      }
      std::vector<std::size_t> idx;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        DeclAction a = base;
        CellSet cells;
        for (std::size_t i : idx) cells.insert(white[i]);
        a.declare = std::move(cells);
        out.push_back(std::move(a));
        if (static_cast<std::int64_t>(idx.size()) >= config_.r) return;
        for (std::size_t i = from; i < white.size(); ++i) {
          if (graph && std::any_of(idx.begin(), idx.end(), [&](std::size_t j) { return white[j].x == white[i].x; })) {
            continue;
          }
          idx.push_back(i);
          rec(i + 1);
          idx.pop_back();
        }
      };
      rec(0);
    }
    return out;
  }

  // True iff every continuation ends white.
  bool explore(const DeclGameState& s, const DeclStrategy& bob) {
    if (s.finished) return terminal(s);
    if (!visited_.insert(key_of(s, bob)).second) return true;
    if (visited_.size() > options_.state_cap) {
      throw CapExceeded("certification exceeded " + std::to_string(options_.state_cap) + " positions");
    }
    if (s.to_move == Player::Alice) {
      for (const DeclAction& a : alice_actions(s)) {
        path_.push_back(a);
        const bool ok = explore(decl_apply(config_, s, Player::Alice, a), bob);
        path_.pop_back();
        if (!ok) return false;
      }
      return true;
    }
    auto next_bob = bob.clone();
    const DeclAction a = next_bob->act(config_, s);
    path_.push_back(a);
    bool ok = false;
    try {
      const DeclGameState next = decl_apply(config_, s, Player::Bob, a);
      if (a.is_pass() && s.consecutive_passes > 0 && next_bob->memory() == bob.memory()) {
        ok = terminal(next);
      } else {
        ok = explore(next, *next_bob);
      }
    } catch (const RuleViolation&) {
      if (!counterexample_) counterexample_ = path_;
      ok = false;
    }
    path_.pop_back();
    return ok;
  }

  DeclGameConfig config_;
  MicroWindow window_;
  MicroOptions options_;
  std::unordered_set<CertKey, CertKeyHash> visited_;
  std::uint64_t terminals_ = 0;
  std::vector<DeclAction> path_;
  std::optional<std::vector<DeclAction>> counterexample_;
};

class MicroMinimaxAlice final : public DeclStrategy {
 public:
  MicroMinimaxAlice(const DeclGameConfig& config, MicroWindow window, MicroOptions options)
      : solver_(config, window, options) {}
  std::string name() const override { return "micro_minimax"; }
  DeclAction act(const DeclGameConfig&, const DeclGameState& state) override {
    std::optional<DeclAction> a = solver_.winning_action(state);
    if (!a) a = solver_.alice_candidates(state).front();
    if (a->is_pass() && state.consecutive_passes > 0) a->close_declarations = true;
    return *a;
  }
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<MicroMinimaxAlice>(*this); }

 private:
  DeclMicroSolver solver_;
};

}  // namespace

MicroCertificate certify_bob_strategy(const DeclGameConfig& config, MicroWindow window, const DeclStrategy& bob,
                                      MicroOptions options) {
  check_window(config, window);
  return Certifier(config, window, options).run(bob);
}

std::unique_ptr<DeclStrategy> make_micro_minimax_alice(const DeclGameConfig& config, MicroWindow window,
                                                       MicroOptions options) {
  return std::make_unique<MicroMinimaxAlice>(config, window, options);
}

}  // namespace gridgames::oracle
