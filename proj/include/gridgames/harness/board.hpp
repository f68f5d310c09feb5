#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gridgames/cell.hpp"
#include "gridgames/staircase.hpp"

namespace gridgames::harness {

// Fixed character set:
//   .  white cell        #  red cell
//   o  token on white    @  token on red
//   -  white cell of the guarded staircase
// Rows run from y = height-1 at the top down to y = 0; each row starts with
// its y label and the bottom line carries x labels modulo 10.
std::string render_board(const CellSet& red, Cell token, std::int64_t width, std::int64_t height,
                         const std::optional<staircase::StaircaseId>& stair = std::nullopt);

}  // namespace gridgames::harness
