#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "gridgames/errors.hpp"
#include "gridgames/rab.hpp"
#include "gridgames/rng.hpp"

namespace gridgames::rab {

Player rab_winner_predicate(std::int64_t r, std::int64_t a, std::int64_t b) {
  if (r < 0 || a < 0 || b < 0) throw std::invalid_argument("r, a and b must be non-negative");
  if (b >= r) return Player::Bob;
  if (b >= a) {
    const __int128 m = static_cast<__int128>(b) - a;
    if ((m + 1) * (m + 2) / 2 > static_cast<__int128>(r) - a) return Player::Bob;
  }
  return Player::Alice;
}

RecursiveBobPlan::RecursiveBobPlan(const RabGameConfig& config, const CellSet& red) {
  const std::int64_t n = config.a + config.b;
  if (n > TriangleSet::kMaxBound) throw PreconditionError("a+b is too large for the recursive plan");
  build(config, TriangleSet(static_cast<int>(n), red));
}

RecursiveBobPlan::RecursiveBobPlan(const RabGameConfig& config, const TriangleSet& red) { build(config, red); }

void RecursiveBobPlan::build(const RabGameConfig& config, const TriangleSet& red) {
  config.validate();
  always_up_ = config.a > config.b;
  if (always_up_) return;
  const std::int64_t n = config.a + config.b;
  if (n > TriangleSet::kMaxBound) throw PreconditionError("a+b is too large for the recursive plan");
  TriangleSet cur = red.clipped(static_cast<int>(n));
  for (std::int64_t k = 0;; ++k) {
    Level level{cur, ReductionCase::NoTriangle};
    if (config.a - k == 0) {
      levels_.push_back(std::move(level));
      break;
    }
    cur = reduce(level.red, &level.next_case);
    levels_.push_back(std::move(level));
  }
}

Shift RecursiveBobPlan::decide(Cell token, std::int64_t a_left, std::int64_t b_left) const {
  if (always_up_) return Shift::Up;
  return decide_level(0, token, a_left, b_left);
}

Shift RecursiveBobPlan::decide_level(std::size_t k, Cell token, std::int64_t a_left, std::int64_t b_left) const {
  if (a_left == 0 || k + 1 >= levels_.size()) return walk(k, token, b_left);
  if (levels_[k].next_case == ReductionCase::NoTriangle && !levels_[k + 1].red.contains(token)) {
    // Token on a farthest cell: any step leaves R for good.
    return Shift::Up;
  }
  return decide_level(k + 1, token, a_left - 1, b_left - 1);
}

Shift RecursiveBobPlan::walk(std::size_t k, Cell token, std::int64_t b_left) const {
  const TriangleSet& red = levels_[k].red;
  const std::int64_t limit = std::min<std::int64_t>(red.bound(), token.sum() + b_left);
  for (std::int64_t s = token.sum() + 1; s <= limit; ++s) {
    for (std::int64_t x = token.x; x <= s - token.y; ++x) {
      const Cell w{x, s - x};
      if (!red.contains(w)) return w.y > token.y ? Shift::Up : Shift::Right;
    }
  }
  return Shift::Up;
}

namespace {

class AlwaysUp final : public RabStrategy {
 public:
  std::string name() const override { return "always-up"; }
  Shift move(const RabGameConfig&, const RabGameState&) override { return Shift::Up; }
  std::unique_ptr<RabStrategy> clone() const override { return std::make_unique<AlwaysUp>(*this); }
};

class RecursiveBob final : public RabStrategy {
 public:
  std::string name() const override { return "recursive"; }
  Shift move(const RabGameConfig& config, const RabGameState& state) override {
    if (!plan_ || red_ != state.red) {
      red_ = state.red;
      plan_ = std::make_shared<const RecursiveBobPlan>(config, red_);
    }
    return plan_->decide(state.token, state.a_left, state.b_left);
  }
  std::unique_ptr<RabStrategy> clone() const override { return std::make_unique<RecursiveBob>(*this); }

 private:
  CellSet red_;
  std::shared_ptr<const RecursiveBobPlan> plan_;
};

// Opens with a fixed red set, then pulls the token back onto the main
// diagonal whenever Bob pushes it one step off.
class FixedSetAlice final : public RabStrategy {
 public:
  FixedSetAlice(std::string name, CellSet cells) : name_(std::move(name)), cells_(std::move(cells)) {}
  std::string name() const override { return name_; }
  CellSet choose_red(const RabGameConfig&) override { return cells_; }
  Shift move(const RabGameConfig&, const RabGameState& state) override {
    const Cell t = state.token;
    if (t.x == t.y + 1) return Shift::Up;
    if (t.y == t.x + 1) return Shift::Right;
    return Shift::Up;
  }
  std::unique_ptr<RabStrategy> clone() const override { return std::make_unique<FixedSetAlice>(*this); }

 private:
  std::string name_;
  CellSet cells_;
};

class RandomRab final : public RabStrategy {
 public:
  RandomRab(Player side, std::uint64_t seed) : side_(side), seed_(seed), rng_(seed) {}
  std::string name() const override { return "random:" + std::to_string(seed_); }
  CellSet choose_red(const RabGameConfig& config) override {
    if (side_ != Player::Alice) return {};
    std::vector<Cell> board;
    for (std::int64_t s = 0; s <= config.a + config.b; ++s) {
      for (std::int64_t x = 0; x <= s; ++x) board.push_back({x, s - x});
    }
    const auto most = std::min<std::uint64_t>(static_cast<std::uint64_t>(config.r), board.size());
    const auto size = uniform_below(rng_, most + 1);
    CellSet out;
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto j = i + uniform_below(rng_, board.size() - i);
      std::swap(board[i], board[j]);
      out.insert(board[i]);
    }
    return out;
  }
  Shift move(const RabGameConfig&, const RabGameState&) override { return coin(rng_) ? Shift::Up : Shift::Right; }
  std::unique_ptr<RabStrategy> clone() const override { return std::make_unique<RandomRab>(*this); }

 private:
  Player side_;
  std::uint64_t seed_;
  Rng rng_;
};

std::string triple(const RabGameConfig& c) {
  return "(r=" + std::to_string(c.r) + ", a=" + std::to_string(c.a) + ", b=" + std::to_string(c.b) + ")";
}

}  // namespace

std::unique_ptr<RabStrategy> bob_always_up(const RabGameConfig& config, bool check) {
  config.validate();
  if (check && config.b < config.r) throw PreconditionError("always-up needs b >= r, got " + triple(config));
  return std::make_unique<AlwaysUp>();
}

std::unique_ptr<RabStrategy> bob_recursive(const RabGameConfig& config, bool check) {
  config.validate();
  if (check && rab_winner_predicate(config.r, config.a, config.b) != Player::Bob) {
    throw PreconditionError("Alice wins " + triple(config) + "; no Bob strategy exists");
  }
  return std::make_unique<RecursiveBob>();
}

std::unique_ptr<RabStrategy> alice_diagonal(const RabGameConfig& config, bool check) {
  config.validate();
  if (check && !(config.a > config.b && config.r > config.b)) {
    throw PreconditionError("the diagonal strategy needs a > b and r > b, got " + triple(config));
  }
  CellSet cells;
  for (std::int64_t i = 0; i < config.r; ++i) cells.insert({i, i});
  return std::make_unique<FixedSetAlice>("diagonal", std::move(cells));
}

std::unique_ptr<RabStrategy> alice_basis_triangle(const RabGameConfig& config, bool check) {
  config.validate();
  if (check && !(config.a == 0 && config.r >= (config.b + 1) * (config.b + 2) / 2)) {
    throw PreconditionError("the basis triangle needs a = 0 and r >= (b+1)(b+2)/2, got " + triple(config));
  }
  CellSet cells;
  for (std::int64_t s = 0; s <= config.b; ++s) {
    for (std::int64_t x = 0; x <= s; ++x) cells.insert({x, s - x});
  }
  return std::make_unique<FixedSetAlice>("basis", std::move(cells));
}

CellSet kite_cells(const RabGameConfig& config) {
  const std::int64_t tail = std::min({config.a, config.b, config.r});
  CellSet cells;
  for (std::int64_t i = 0; i < tail; ++i) cells.insert({i, i});
  const std::int64_t room = config.r - tail;
  std::int64_t height = 0;
  while ((height + 1) * (height + 2) / 2 <= room) ++height;
  for (std::int64_t s = 0; s < height; ++s) {
    for (std::int64_t x = 0; x <= s; ++x) cells.insert({tail + x, tail + s - x});
  }
  return cells;
}

std::unique_ptr<RabStrategy> alice_kite(const RabGameConfig& config, bool check) {
  config.validate();
  if (check && rab_winner_predicate(config.r, config.a, config.b) != Player::Alice) {
    throw PreconditionError("Bob wins " + triple(config) + "; no Alice strategy exists");
  }
  return std::make_unique<FixedSetAlice>("kite", kite_cells(config));
}

std::unique_ptr<RabStrategy> rab_random(Player side, std::uint64_t seed) {
  return std::make_unique<RandomRab>(side, seed);
}

std::vector<std::string> rab_strategy_names(Player side) {
  if (side == Player::Alice) return {"diagonal", "basis", "kite", "random[:seed]"};
  return {"always-up", "recursive", "random[:seed]"};
}

std::unique_ptr<RabStrategy> make_rab_strategy(const std::string& name, Player side, const RabGameConfig& config,
                                               bool check) {
  if (name.rfind("random", 0) == 0) {
    std::uint64_t seed = 0;
    if (name.size() > 6) {
      if (name[6] != ':') throw std::invalid_argument("unknown strategy '" + name + "'");
      const char* first = name.data() + 7;
      const char* last = name.data() + name.size();
      auto [ptr, ec] = std::from_chars(first, last, seed);
      if (ec != std::errc{} || ptr != last) throw std::invalid_argument("bad seed in '" + name + "'");
    }
    return rab_random(side, seed);
  }
  if (side == Player::Bob) {
    if (name == "always-up") return bob_always_up(config, check);
    if (name == "recursive") return bob_recursive(config, check);
  } else {
    if (name == "diagonal") return alice_diagonal(config, check);
    if (name == "basis") return alice_basis_triangle(config, check);
    if (name == "kite") return alice_kite(config, check);
  }
  throw std::invalid_argument("unknown " + to_string(side) + " strategy '" + name + "'");
}

}  // namespace gridgames::rab
