#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "capir/brain.hpp"
#include "capir/level.hpp"
#include "capir/planner.hpp"
#include "capir/rng.hpp"
#include "capir/world.hpp"

namespace capir {

enum class AssistantPolicy : std::uint8_t { kCapir, kRandom, kOracle };
enum class GameStatus : std::uint8_t { kActive, kWon, kTimedOut };

std::string_view to_string(AssistantPolicy p);
std::optional<AssistantPolicy> parse_assistant_policy(std::string_view name);
std::string_view to_string(GameStatus s);

struct GameOptions {
  AssistantPolicy assistant = AssistantPolicy::kCapir;
  RationalityModel model;
  HumanResponseModel response = HumanResponseModel::kSoftmax;
  int max_steps = 300;
};

struct GameStep {
  HumanAction human = HumanAction::kStay;
  AssistantAction assistant = AssistantAction::kStay;
  std::vector<double> belief;           // live subtasks, as used for the choice
  std::vector<double> belief_by_ghost;  // same, indexed by ghost
  std::vector<double> likelihoods;      // live subtasks
  std::vector<std::size_t> killed;
  bool zero_likelihood = false;
};

// One game in progress: world state, intention tracker and the world
// generator. Live sessions and the headless simulator both advance games
// exclusively through play().
//
// Per step the world generator is consumed in this order: one draw for a
// random assistant (if any), then one draw per live ghost in index order.
class Game {
 public:
  Game(const Level& level, const PolicyCache& cache, std::uint64_t seed,
       GameOptions options);

  // Observes the human action, picks the assistant action and advances the
  // world by one step. `true_target` is required by the oracle assistant.
  // Throws std::logic_error when the game is no longer active.
  GameStep play(HumanAction human,
                std::optional<std::size_t> true_target = std::nullopt);

  const Level& level() const { return *level_; }
  const PolicyCache& cache() const { return *cache_; }
  const WorldState& world() const { return world_; }
  const IntentionTracker& tracker() const { return tracker_; }
  const GameOptions& options() const { return options_; }
  std::uint64_t seed() const { return seed_; }
  int steps() const { return steps_; }
  GameStatus status() const { return status_; }

 private:
  const Level* level_;
  const PolicyCache* cache_;
  std::uint64_t seed_;
  GameOptions options_;
  WorldState world_;
  IntentionTracker tracker_;
  Rng rng_;
  int steps_ = 0;
  GameStatus status_ = GameStatus::kActive;
};

}  // namespace capir
