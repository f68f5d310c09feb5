#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gridgames/decl_game.hpp"

namespace gridgames::harness {

/// Declares one cell per column ahead of the token, spread over all
/// staircases Bob may pick, then spends her Up shifts and then her Right
/// shifts. The seed sets the spread's phase and the declaration timing.
std::unique_ptr<DeclStrategy> chaser(const DeclGameConfig& config, std::uint64_t seed);

/// Each turn shifts, declares a random function graph ahead of the token, or
/// both, uniformly among what her budgets allow.
std::unique_ptr<DeclStrategy> graph_random(const DeclGameConfig& config, std::uint64_t seed);

/// Spends every shift first, then declares near the token.
std::unique_ptr<DeclStrategy> budget_burner(const DeclGameConfig& config, std::uint64_t seed);

/// Perfect Alice from the micro solver; only for configurations whose
/// reachable window has at most 64 cells.
std::unique_ptr<DeclStrategy> micro_minimax(const DeclGameConfig& config);

/// "chaser", "graph_random", "budget_burner", optionally with ":seed" or
/// "(seed)", and "micro_minimax". Throws std::invalid_argument.
std::unique_ptr<DeclStrategy> make_adversary(const std::string& name, const DeclGameConfig& config);

std::vector<std::string> adversary_names();

}  // namespace gridgames::harness
