#include "gridgames/cell.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace gridgames {

std::string to_string(Shift s) {
  switch (s) {
    case Shift::Up:
      return "up";
    case Shift::Right:
      return "right";
    case Shift::Diagonal:
      return "diagonal";
  }
  return "?";
}

std::string to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }

std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::string to_string(const CellSet& cells) {
  std::string out;
  for (const Cell& c : cells) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

namespace {

std::string lower(std::string_view text) {
  std::string s(text);
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::int64_t parse_coord(std::string_view text, std::string_view whole) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed cell '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Shift parse_shift(std::string_view text) {
  const std::string s = lower(text);
  if (s == "up" || s == "u") return Shift::Up;
  if (s == "right" || s == "r") return Shift::Right;
  if (s == "diagonal" || s == "diag" || s == "d") return Shift::Diagonal;
  throw std::invalid_argument("unknown shift '" + std::string(text) + "'");
}

Player parse_player(std::string_view text) {
  const std::string s = lower(text);
  if (s == "alice") return Player::Alice;
  if (s == "bob") return Player::Bob;
  throw std::invalid_argument("unknown player '" + std::string(text) + "'");
}

Cell parse_cell(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("malformed cell '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed cell '" + std::string(text) + "'");
  }
  Cell c{parse_coord(body.substr(0, comma), text), parse_coord(body.substr(comma + 1), text)};
  if (!c.valid()) throw std::invalid_argument("negative coordinate in '" + std::string(text) + "'");
  return c;
}

CellSet parse_cells(std::string_view text) {
  CellSet out;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    bool blank = true;
    for (char ch : token) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (!blank) out.insert(parse_cell(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    const bool separator = ch == ';' || (depth == 0 && std::isspace(static_cast<unsigned char>(ch)));
    if (separator) {
      flush();
    } else {
      token += ch;
      if (ch == ')' && depth == 0) flush();
    }
  }
  flush();
  return out;
}

}  // namespace gridgames
