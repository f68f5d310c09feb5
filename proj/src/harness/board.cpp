#include "gridgames/harness/board.hpp"

#include <iomanip>
#include <sstream>

namespace gridgames::harness {

std::string render_board(const CellSet& red, Cell token, std::int64_t width, std::int64_t height,
                         const std::optional<staircase::StaircaseId>& stair) {
  const int label = static_cast<int>(std::to_string(std::max<std::int64_t>(height - 1, 0)).size());
  std::ostringstream os;
  for (std::int64_t y = height - 1; y >= 0; --y) {
    os << std::setw(label) << y << ' ';
    for (std::int64_t x = 0; x < width; ++x) {
      const Cell c{x, y};
      const bool is_red = red.contains(c);
      char ch = is_red ? '#' : '.';
      if (!is_red && stair && staircase::staircase_contains(*stair, c)) ch = '-';
      if (c == token) ch = is_red ? '@' : 'o';
      os << ch;
    }
    os << '\n';
  }
  os << std::string(static_cast<std::size_t>(label) + 1, ' ');
  for (std::int64_t x = 0; x < width; ++x) os << static_cast<char>('0' + x % 10);
  os << '\n';
  return os.str();
}

}  // namespace gridgames::harness
