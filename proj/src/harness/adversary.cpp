#include "gridgames/harness/adversary.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "gridgames/micro.hpp"
#include "gridgames/rng.hpp"
#include "gridgames/staircase.hpp"

namespace gridgames::harness {

namespace {

bool can_declare(const DeclGameConfig& c, const DeclGameState& s) {
  return !s.declarations_closed && s.declarations_used < c.p;
}
bool can_up(const DeclGameConfig& c, const DeclGameState& s) { return s.alice_up_used < c.a_up; }
bool can_right(const DeclGameConfig& c, const DeclGameState& s) { return s.alice_right_used < c.a_right; }

bool fits(const DeclGameConfig& c, Cell cell) {
  if (c.mode.kind != DeclarationMode::Kind::FunctionGraph) return true;
  return cell.x < c.mode.width && cell.y < c.mode.height;
}

// Cell for column offset i from `t`, at `row` rows above the staircase of
// step length f through t.
CellSet graph_ahead(const DeclGameConfig& c, Cell t, const std::function<std::int64_t(std::int64_t)>& lift) {
  CellSet cells;
  for (std::int64_t i = 0; static_cast<std::int64_t>(cells.size()) < c.r; ++i) {
    const Cell cell{t.x + i, t.y + i / c.f + lift(i)};
    if (c.mode.kind == DeclarationMode::Kind::FunctionGraph && cell.x >= c.mode.width) break;
    if (fits(c, cell)) cells.insert(cell);
  }
  return cells;
}

DeclAction finish() {
  DeclAction a = DeclAction::pass();
  a.close_declarations = true;
  return a;
}

class Chaser final : public DeclStrategy {
 public:
  Chaser(const DeclGameConfig& c, std::uint64_t seed)
      : seed_(seed), rng_(seed), delta_(staircase::delta_parameter(c.r, c.p, c.f)) {
    phase_ = static_cast<std::int64_t>(uniform_below(rng_, static_cast<std::uint64_t>(delta_)));
    wait_ = static_cast<std::int64_t>(uniform_below(rng_, 3));
  }
  std::string name() const override { return "chaser:" + std::to_string(seed_); }
  DeclAction act(const DeclGameConfig& c, const DeclGameState& s) override {
    DeclAction a;
    if (can_up(c, s)) {
      a = DeclAction::move(Shift::Up);
    } else if (can_right(c, s)) {
      a = DeclAction::move(Shift::Right);
    }
    const bool declare = can_declare(c, s) && wait_-- <= 0;
    if (declare) {
      if (coin(rng_)) a.shifts = 0;
      const Cell t = a.shifts == 1 ? shifted(s.token, a.shift) : s.token;
      const std::int64_t phase = phase_, delta = delta_;
      a.declare = graph_ahead(c, t, [&](std::int64_t i) { return (i + phase) % delta; });
      wait_ = static_cast<std::int64_t>(uniform_below(rng_, 4));
    }
    if (a.is_pass()) return finish();
    return a;
  }
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<Chaser>(*this); }

 private:
  std::uint64_t seed_;
  Rng rng_;
  std::int64_t delta_;
  std::int64_t phase_ = 0;
  std::int64_t wait_ = 0;
};

class GraphRandom final : public DeclStrategy {
 public:
  GraphRandom(const DeclGameConfig& c, std::uint64_t seed)
      : seed_(seed), rng_(seed), delta_(staircase::delta_parameter(c.r, c.p, c.f)) {}
  std::string name() const override { return "graph_random:" + std::to_string(seed_); }
  DeclAction act(const DeclGameConfig& c, const DeclGameState& s) override {
    std::vector<int> shifts;
    if (can_up(c, s)) shifts.push_back(0);
    if (can_right(c, s)) shifts.push_back(1);
    const bool declarable = can_declare(c, s);
    if (shifts.empty() && !declarable) return finish();
    DeclAction a;
    // 0: shift only, 1: declare only, 2: both.
    std::uint64_t kind = 0;
    if (shifts.empty()) {
      kind = 1;
    } else if (declarable) {
      kind = uniform_below(rng_, 3);
    }
    if (kind != 1) {
      const int pick = shifts[uniform_below(rng_, shifts.size())];
      a = DeclAction::move(pick == 0 ? Shift::Up : Shift::Right);
    }
    if (kind != 0) {
      const Cell t = a.shifts == 1 ? shifted(s.token, a.shift) : s.token;
      const std::uint64_t span = static_cast<std::uint64_t>(2 * delta_);
      a.declare = graph_ahead(c, t, [&](std::int64_t) { return static_cast<std::int64_t>(uniform_below(rng_, span)); });
    }
    return a;
  }
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<GraphRandom>(*this); }

 private:
  std::uint64_t seed_;
  Rng rng_;
  std::int64_t delta_;
};

class BudgetBurner final : public DeclStrategy {
 public:
  BudgetBurner(const DeclGameConfig& c, std::uint64_t seed)
      : seed_(seed), rng_(seed), delta_(staircase::delta_parameter(c.r, c.p, c.f)) {}
  std::string name() const override { return "budget_burner:" + std::to_string(seed_); }
  DeclAction act(const DeclGameConfig& c, const DeclGameState& s) override {
    const bool up = can_up(c, s), right = can_right(c, s);
    if (up && right) return DeclAction::move(coin(rng_) ? Shift::Up : Shift::Right);
    if (up) return DeclAction::move(Shift::Up);
    if (right) return DeclAction::move(Shift::Right);
    if (can_declare(c, s)) {
      const std::uint64_t span = static_cast<std::uint64_t>(delta_ + 1);
      return DeclAction::declaration(
          graph_ahead(c, s.token, [&](std::int64_t) { return static_cast<std::int64_t>(uniform_below(rng_, span)); }));
    }
    return finish();
  }
  std::unique_ptr<DeclStrategy> clone() const override { return std::make_unique<BudgetBurner>(*this); }

 private:
  std::uint64_t seed_;
  Rng rng_;
  std::int64_t delta_;
};

}  // namespace

std::unique_ptr<DeclStrategy> chaser(const DeclGameConfig& config, std::uint64_t seed) {
  config.validate();
  return std::make_unique<Chaser>(config, seed);
}

std::unique_ptr<DeclStrategy> graph_random(const DeclGameConfig& config, std::uint64_t seed) {
  config.validate();
  return std::make_unique<GraphRandom>(config, seed);
}

std::unique_ptr<DeclStrategy> budget_burner(const DeclGameConfig& config, std::uint64_t seed) {
  config.validate();
  return std::make_unique<BudgetBurner>(config, seed);
}

std::unique_ptr<DeclStrategy> micro_minimax(const DeclGameConfig& config) {
  return oracle::make_micro_minimax_alice(config, oracle::minimal_window(config));
}

std::unique_ptr<DeclStrategy> make_adversary(const std::string& name, const DeclGameConfig& config) {
  std::string base = name;
  std::uint64_t seed = 0;
  std::string digits;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    base = name.substr(0, colon);
    digits = name.substr(colon + 1);
  } else if (auto open = name.find('('); open != std::string::npos && name.back() == ')') {
    base = name.substr(0, open);
    digits = name.substr(open + 1, name.size() - open - 2);
  }
  if (!digits.empty() || base != name) {
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("bad seed in adversary '" + name + "'");
    }
  }
  if (base == "chaser") return chaser(config, seed);
  if (base == "graph_random") return graph_random(config, seed);
  if (base == "budget_burner") return budget_burner(config, seed);
  if (base == "micro_minimax" && base == name) return micro_minimax(config);
  throw std::invalid_argument("unknown adversary '" + name + "'");
}

std::vector<std::string> adversary_names() {
  return {"chaser[:seed]", "graph_random[:seed]", "budget_burner[:seed]", "micro_minimax"};
}

}  // namespace gridgames::harness
