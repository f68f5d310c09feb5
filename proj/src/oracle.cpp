#include "gridgames/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gridgames/errors.hpp"
#include "gridgames/parallel.hpp"
#include "gridgames/rab.hpp"

namespace gridgames::oracle {

namespace {

constexpr int kMaxMaskBound = 9;  // T_9 has 55 cells, the largest that fits a 64-bit mask

constexpr std::uint64_t layer_mask(int k) { return (1ULL << (k + 1)) - 1; }

// layers[k] holds the red cells of sum k; Alice wins iff bit 0 of the result.
bool alice_wins_layers(const std::uint64_t* layers, int a, int b) {
  const int n = a + b;
  std::array<std::uint64_t, 64> next{};
  std::array<std::uint64_t, 64> cur{};
  next[0] = layers[n];
  for (int k = n - 1; k >= 0; --k) {
    const std::uint64_t red = layers[k];
    const std::uint64_t white = ~red & layer_mask(k);
    for (int al = 0; al <= a; ++al) {
      const int bl = n - k - al;
      if (bl < 0 || bl > b) {
        cur[static_cast<std::size_t>(al)] = 0;
        continue;
      }
      const std::uint64_t stay = next[static_cast<std::size_t>(al)];
      const std::uint64_t red_win = bl == 0 ? red : red & stay & (stay >> 1);
      std::uint64_t white_win = 0;
      if (al > 0) {
        const std::uint64_t spent = next[static_cast<std::size_t>(al - 1)];
        white_win = white & (spent | (spent >> 1));
      }
      cur[static_cast<std::size_t>(al)] = red_win | white_win;
    }
    std::swap(cur, next);
  }
  return next[static_cast<std::size_t>(a)] & 1ULL;
}

struct Binomials {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  Binomials() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
  std::uint64_t operator()(int n, int k) const { return k < 0 || k > n ? 0 : c[n][k]; }
};

const Binomials& binom() {
  static const Binomials table;
  return table;
}

// Compact index of the board: antidiagonal first, then x.
struct Board {
  int n = 0;
  int cells = 0;
  std::array<int, kMaxMaskBound + 2> offset{};

  explicit Board(std::int64_t a_plus_b) {
    if (a_plus_b > kMaxMaskBound) {
      throw CapExceeded("boards beyond T_" + std::to_string(kMaxMaskBound) + " are outside the oracle's range");
    }
    n = static_cast<int>(a_plus_b);
    for (int k = 0; k <= n; ++k) offset[static_cast<std::size_t>(k)] = k * (k + 1) / 2;
    cells = (n + 1) * (n + 2) / 2;
  }

  void layers(std::uint64_t mask, std::uint64_t* out) const {
    for (int k = 0; k <= n; ++k) out[k] = (mask >> offset[static_cast<std::size_t>(k)]) & layer_mask(k);
  }

  rab::TriangleSet triangle(std::uint64_t mask) const {
    std::array<std::uint64_t, kMaxMaskBound + 1> ls{};
    layers(mask, ls.data());
    rab::TriangleSet t(n);
    for (int k = 0; k <= n; ++k) t.set_layer(k, ls[static_cast<std::size_t>(k)]);
    return t;
  }
};

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::uint64_t unrank_colex(std::uint64_t rank, int size) {
  std::uint64_t mask = 0;
  for (int i = size; i >= 1; --i) {
    int c = i - 1;
    while (binom()(c + 1, i) <= rank) ++c;
    mask |= 1ULL << c;
    rank -= binom()(c, i);
  }
  return mask;
}

}  // namespace

bool alice_wins_fixed(const rab::TriangleSet& red, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("budgets must be non-negative");
  const int n = a + b;
  if (n > rab::TriangleSet::kMaxBound || n >= 64) throw std::invalid_argument("board too large");
  std::array<std::uint64_t, rab::TriangleSet::kMaxBound + 1> layers{};
  for (int k = 0; k <= n; ++k) layers[static_cast<std::size_t>(k)] = red.layer(k);
  return alice_wins_layers(layers.data(), a, b);
}

Player solve_fixed_R(const CellSet& red, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("budgets must be non-negative");
  if (a + b > rab::TriangleSet::kMaxBound) return solve_fixed_R_reference(red, a, b);
  const int n = static_cast<int>(a + b);
  return alice_wins_fixed(rab::TriangleSet(n, red), static_cast<int>(a), static_cast<int>(b)) ? Player::Alice
                                                                                                 : Player::Bob;
}

Player solve_fixed_R_reference(const CellSet& red, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("budgets must be non-negative");
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>, bool> memo;
  // True iff Alice wins from the position.
  std::function<bool(Cell, std::int64_t, std::int64_t)> win = [&](Cell t, std::int64_t al, std::int64_t bl) {
    const bool bob_moves = red.contains(t);
    if (bob_moves && bl == 0) return true;
    if (!bob_moves && al == 0) return false;
    const auto key = std::make_tuple(t.x, t.y, al, bl);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    if (bob_moves) {
      result = win({t.x, t.y + 1}, al, bl - 1) && win({t.x + 1, t.y}, al, bl - 1);
    } else {
      result = win({t.x, t.y + 1}, al - 1, bl) || win({t.x + 1, t.y}, al - 1, bl);
    }
    memo.emplace(key, result);
    return result;
  };
  return win({0, 0}, a, b) ? Player::Alice : Player::Bob;
}

std::uint64_t red_set_count(std::int64_t r, std::int64_t a, std::int64_t b) {
  const Board board(a + b);
  const int top = static_cast<int>(std::min<std::int64_t>(r, board.cells));
  std::uint64_t total = 0;
  for (int s = 0; s <= top; ++s) total += binom()(board.cells, s);
  return total;
}

RabSolution solve_rab(std::int64_t r, std::int64_t a, std::int64_t b, const SolveOptions& options) {
  if (r < 0 || a < 0 || b < 0) throw std::invalid_argument("r, a and b must be non-negative");
  const Board board(a + b);
  const std::uint64_t total = red_set_count(r, a, b);
  if (total > options.cap) {
    throw CapExceeded("solve_rab(" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(b) +
                      ") needs " + std::to_string(total) + " red sets, above the cap of " +
                      std::to_string(options.cap));
  }
  const int jobs = resolve_jobs(options.jobs);
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  constexpr std::uint64_t kChunk = 1 << 15;
  RabSolution sol;
  for (int s = static_cast<int>(std::min<std::int64_t>(r, board.cells)); s >= 0; --s) {
    const std::uint64_t count = binom()(board.cells, s);
    const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> examined{0};
    parallel_for(static_cast<std::int64_t>(chunks), jobs, [&](std::int64_t chunk) {
      const std::uint64_t start = static_cast<std::uint64_t>(chunk) * kChunk;
      if (start > best.load()) return;
      const std::uint64_t stop = std::min(count, start + kChunk);
      std::uint64_t mask = unrank_colex(start, s);
      std::array<std::uint64_t, kMaxMaskBound + 1> layers{};
      std::uint64_t seen = 0;
      for (std::uint64_t rank = start; rank < stop; ++rank) {
        if (rank > best.load(std::memory_order_relaxed)) break;
        board.layers(mask, layers.data());
        ++seen;
        if (alice_wins_layers(layers.data(), ia, ib)) {
          std::uint64_t cur = best.load();
          while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
          }
          break;
        }
        if (rank + 1 < stop) mask = next_combination(mask);
      }
      examined += seen;
    });
    sol.examined += examined.load();
    if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
      sol.winner = Player::Alice;
      sol.witness = board.triangle(unrank_colex(best.load(), s)).cells();
      return sol;
    }
  }
  sol.winner = Player::Bob;
  return sol;
}

void for_each_red_set(std::int64_t r, std::int64_t a, std::int64_t b,
                      const std::function<bool(const rab::TriangleSet&)>& fn) {
  const Board board(a + b);
  for (int s = static_cast<int>(std::min<std::int64_t>(r, board.cells)); s >= 0; --s) {
    const std::uint64_t count = binom()(board.cells, s);
    std::uint64_t mask = s == 0 ? 0 : (1ULL << s) - 1;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!fn(board.triangle(mask))) return;
      if (i + 1 < count) mask = next_combination(mask);
    }
  }
}

Thm7Report verify_theorem7(std::int64_t max_sum, std::int64_t max_r, const SolveOptions& options) {
  if (max_sum < 0 || max_r < 0) throw std::invalid_argument("ranges must be non-negative");
  Thm7Report rep;
  rep.max_sum = max_sum;
  rep.max_r = max_r;
  for (std::int64_t sum = 0; sum <= max_sum; ++sum) {
    for (std::int64_t a = 0; a <= sum; ++a) {
      for (std::int64_t r = 0; r <= max_r; ++r) {
        Thm7Entry e;
        e.r = r;
        e.a = a;
        e.b = sum - a;
        e.predicted = rab::rab_winner_predicate(e.r, e.a, e.b);
        rep.entries.push_back(e);
      }
    }
  }
  SolveOptions single = options;
  single.jobs = 1;
  parallel_for(static_cast<std::int64_t>(rep.entries.size()), resolve_jobs(options.jobs), [&](std::int64_t i) {
    Thm7Entry& e = rep.entries[static_cast<std::size_t>(i)];
    RabSolution sol = solve_rab(e.r, e.a, e.b, single);
    e.solved = sol.winner;
    e.witness = std::move(sol.witness);
  });
  rep.mismatches = std::count_if(rep.entries.begin(), rep.entries.end(),
                                 [](const Thm7Entry& e) { return e.predicted != e.solved; });
  return rep;
}

std::string thm7_to_jsonl(const Thm7Report& report) {
  using nlohmann::json;
  std::ostringstream os;
  for (const Thm7Entry& e : report.entries) {
    json j = {{"type", "entry"},
              {"r", e.r},
              {"a", e.a},
              {"b", e.b},
              {"predicted", to_string(e.predicted)},
              {"solved", to_string(e.solved)},
              {"match", e.predicted == e.solved}};
    if (e.witness) {
      json w = json::array();
      for (const Cell& c : *e.witness) w.push_back(json::array({c.x, c.y}));
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    os << j.dump() << '\n';
  }
  json summary = {{"type", "summary"},
                  {"max_sum", report.max_sum},
                  {"max_r", report.max_r},
                  {"triples", report.entries.size()},
                  {"mismatches", report.mismatches}};
  os << summary.dump() << '\n';
  return os.str();
}

namespace {

// Memo over (cell, a_left); b_left follows from the cell's layer.
class PositionMemo {
 public:
  PositionMemo(std::int64_t a, std::int64_t b) : a_(a), n_(a + b) {
    const std::int64_t cells = (n_ + 1) * (n_ + 2) / 2;
    values_.assign(static_cast<std::size_t>(cells * (a + 1)), -1);
  }
  std::int8_t& at(Cell t, std::int64_t al) {
    const std::int64_t k = t.sum();
    return values_[static_cast<std::size_t>((k * (k + 1) / 2 + t.x) * (a_ + 1) + al)];
  }

 private:
  std::int64_t a_;
  std::int64_t n_;
  std::vector<std::int8_t> values_;
};

}  // namespace

bool bob_strategy_wins(const RabGameConfig& config, RabStrategy& bob, const CellSet& red) {
  config.validate();
  RabGameState probe;
  probe.red = red;
  PositionMemo memo(config.a, config.b);
  std::function<bool(Cell, std::int64_t, std::int64_t)> bob_wins = [&](Cell t, std::int64_t al, std::int64_t bl) {
    const bool bob_moves = red.contains(t);
    if (bob_moves && bl == 0) return false;
    if (!bob_moves && al == 0) return true;
    std::int8_t& slot = memo.at(t, al);
    if (slot >= 0) return slot == 1;
    bool result = false;
    if (bob_moves) {
      probe.token = t;
      probe.a_left = al;
      probe.b_left = bl;
      const Shift s = bob.move(config, probe);
      result = s != Shift::Diagonal && bob_wins(shifted(t, s), al, bl - 1);
    } else {
      result = bob_wins({t.x, t.y + 1}, al - 1, bl) && bob_wins({t.x + 1, t.y}, al - 1, bl);
    }
    slot = result ? 1 : 0;
    return result;
  };
  return bob_wins({0, 0}, config.a, config.b);
}

StrategyCheck check_bob_strategy(const RabGameConfig& config, const RabStrategy& bob) {
  StrategyCheck check;
  auto strategy = bob.clone();
  for_each_red_set(config.r, config.a, config.b, [&](const rab::TriangleSet& t) {
    ++check.red_sets;
    const CellSet red = t.cells();
    if (!bob_strategy_wins(config, *strategy, red)) {
      ++check.losses;
      if (!check.counterexample) check.counterexample = red;
    }
    return true;
  });
  return check;
}

bool alice_strategy_wins(const RabGameConfig& config, RabStrategy& alice) {
  config.validate();
  const CellSet red = alice.choose_red(config);
  if (static_cast<std::int64_t>(red.size()) > config.r) return false;
  RabGameState probe;
  probe.red = red;
  PositionMemo memo(config.a, config.b);
  std::function<bool(Cell, std::int64_t, std::int64_t)> alice_wins = [&](Cell t, std::int64_t al,
                                                                         std::int64_t bl) {
    const bool bob_moves = red.contains(t);
    if (bob_moves && bl == 0) return true;
    if (!bob_moves && al == 0) return false;
    std::int8_t& slot = memo.at(t, al);
    if (slot >= 0) return slot == 1;
    bool result = false;
    if (bob_moves) {
      result = alice_wins({t.x, t.y + 1}, al, bl - 1) && alice_wins({t.x + 1, t.y}, al, bl - 1);
    } else {
      probe.token = t;
      probe.a_left = al;
      probe.b_left = bl;
      const Shift s = alice.move(config, probe);
      result = s != Shift::Diagonal && alice_wins(shifted(t, s), al - 1, bl);
    }
    slot = result ? 1 : 0;
    return result;
  };
  return alice_wins({0, 0}, config.a, config.b);
}

}  // namespace gridgames::oracle
