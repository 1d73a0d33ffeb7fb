#pragma once

#include <optional>
#include <vector>

#include "capir/ghostbuster.hpp"
#include "capir/level.hpp"
#include "capir/rng.hpp"

namespace capir {

// Full-game dynamics over all ghosts. Shared by the simulator and live
// sessions.

// Nearest live ghost within shoot range of the human, ties by lowest index.
std::optional<std::size_t> shoot_target(const GridMap& map,
                                        const GameParams& params,
                                        const WorldState& world);

struct WorldStepEvents {
  std::vector<std::size_t> killed;
};

// Applies one step in place: protagonists move, SHOOT kills at most one
// ghost, then every remaining live ghost moves in index order, consuming
// exactly one uniform draw each.
WorldStepEvents advance_world(const Level& level, WorldState& world,
                              ActionPair actions, Rng& rng);

struct WorldOutcome {
  WorldState state;
  double probability = 0.0;
  double reward = 0.0;
};

// Exact successor distribution of advance_world (joint over all ghosts).
std::vector<WorldOutcome> world_step_distribution(const Level& level,
                                                  const WorldState& world,
                                                  ActionPair actions);

}  // namespace capir
