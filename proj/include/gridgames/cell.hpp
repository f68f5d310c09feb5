#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gridgames {

/// A lattice point of the board N x N. Both coordinates are non-negative.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  std::int64_t sum() const { return x + y; }
  bool valid() const { return x >= 0 && y >= 0; }

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Red sets, declarations and witnesses. Ordered so that serialization and
/// iteration are deterministic.
using CellSet = std::set<Cell>;

enum class Shift { Up, Right, Diagonal };

enum class Player { Alice, Bob };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }

inline Cell shifted(Cell c, Shift s, std::int64_t times = 1) {
  switch (s) {
    case Shift::Up:
      return {c.x, c.y + times};
    case Shift::Right:
      return {c.x + times, c.y};
    case Shift::Diagonal:
      return {c.x + times, c.y + times};
  }
  return c;
}

/// True iff `to` is reachable from `from` by up/right moves.
inline bool dominates(Cell to, Cell from) { return to.x >= from.x && to.y >= from.y; }

std::string to_string(Shift s);
std::string to_string(Player p);
std::string to_string(Cell c);

Shift parse_shift(std::string_view text);
Player parse_player(std::string_view text);

/// Parses "x,y" or "(x,y)". Throws std::invalid_argument on malformed or
/// negative input.
Cell parse_cell(std::string_view text);

/// Parses a whitespace- or semicolon-separated list of cells, e.g.
/// "(0,0) (1,1)" or "0,0;1,1".
CellSet parse_cells(std::string_view text);

std::string to_string(const CellSet& cells);

}  // namespace gridgames
