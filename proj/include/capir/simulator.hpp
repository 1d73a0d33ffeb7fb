#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capir/game.hpp"

namespace capir {

enum class HumanPolicyKind : std::uint8_t {
  kSoftmax,        // samples from the softmax model of its target subtask
  kGreedyNearest,  // walks a shortest path to the nearest ghost and shoots
  kRandom,         // uniform over the six actions
  kExternal,       // actions supplied by the caller (live sessions)
};

enum class TargetProcess : std::uint8_t {
  kFixed,      // keep the target until it dies
  kSwitching,  // switch per step with probability 1 - stay
};

std::string_view to_string(HumanPolicyKind k);
std::optional<HumanPolicyKind> parse_human_policy(std::string_view name);
std::string_view to_string(TargetProcess p);
std::optional<TargetProcess> parse_target_process(std::string_view name);

struct ScriptedHumanConfig {
  HumanPolicyKind kind = HumanPolicyKind::kSoftmax;
  TargetProcess target_process = TargetProcess::kFixed;
  double beta = 1.0;
  double stay = 0.8;
  // Drawn uniformly from live ghosts when unset.
  std::optional<std::size_t> initial_target;
};

struct HumanDecision {
  HumanAction action = HumanAction::kStay;
  std::optional<std::size_t> target;
};

// Scripted stand-in for a human player. All of its randomness comes from its
// own generator, seeded from the episode seed via splitmix64, in this order
// per step: target draw (initial pick or switch test, then the new target if
// switching), then the action draw.
class ScriptedHuman {
 public:
  ScriptedHuman(ScriptedHumanConfig config, std::uint64_t episode_seed);

  HumanDecision decide(const Level& level, const PolicyCache& cache,
                       const WorldState& world);

 private:
  std::size_t pick_target(const Level& level, const WorldState& world);

  ScriptedHumanConfig config_;
  Rng rng_;
  std::optional<std::size_t> target_;
};

struct EpisodeConfig {
  ScriptedHumanConfig human;
  AssistantPolicy assistant = AssistantPolicy::kCapir;
  RationalityModel model;  // tracker's model of the human
  HumanResponseModel response = HumanResponseModel::kSoftmax;
  int max_steps = 300;
};

struct StepRecord {
  HumanAction human = HumanAction::kStay;
  AssistantAction assistant = AssistantAction::kStay;
  std::optional<std::size_t> target;
  std::vector<double> belief;  // by ghost, 0 for dead ghosts
  std::vector<std::size_t> killed;
  WorldState state;  // after the step

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

enum class Outcome : std::uint8_t { kAllDead, kStepCap };
std::string_view to_string(Outcome o);

struct EpisodeLog {
  std::string level_name;
  std::uint64_t level_hash = 0;
  std::uint64_t seed = 0;
  EpisodeConfig config;
  WorldState initial;
  std::vector<StepRecord> steps;
  Outcome outcome = Outcome::kStepCap;

  std::size_t total_steps() const { return steps.size(); }
};

// Runs one seeded episode. For HumanPolicyKind::kExternal the human actions
// come from `external_actions` (the episode ends early if they run out).
// Throws CacheError(kLevelMismatch) when the cache does not match the level.
EpisodeLog run_episode(const Level& level, const PolicyCache& cache,
                       const EpisodeConfig& config, std::uint64_t seed,
                       std::span<const HumanAction> external_actions = {});

struct ReplayResult {
  bool ok = true;
  std::optional<std::size_t> first_divergent_step;
  std::string detail;
};

// Re-executes a log from its header and compares every record bit-exactly.
ReplayResult replay_episode(const Level& level, const PolicyCache& cache,
                            const EpisodeLog& log);

struct NamedConfig {
  std::string name;
  EpisodeConfig config;
};

struct SummaryRow {
  std::string config;
  std::size_t episodes = 0;
  double mean_steps = 0.0;
  double sem = 0.0;
  double completion_rate = 0.0;
  // Share of episodes that hit the step cap.
  double cap_rate = 0.0;
};

struct StepStatistics {
  double mean = 0.0;
  double sem = 0.0;  // sample standard deviation / sqrt(N)
};

// Exact in the sense that it does not depend on the order of `steps`.
StepStatistics step_statistics(std::span<const std::size_t> steps);

// Episode i of every configuration uses seed base_seed + i.
std::vector<SummaryRow> evaluate(const Level& level, const PolicyCache& cache,
                                 std::span<const NamedConfig> configs,
                                 std::size_t episodes, std::uint64_t base_seed);

std::string summary_csv(std::span<const SummaryRow> rows);

// Fraction of steps, after the first 3 steps of each target's tenure, at
// which the belief argmax names the true target. 0 if no step qualifies.
inline constexpr std::size_t kTrackingBurnIn = 3;
double tracking_accuracy(const EpisodeLog& log);

// Steps from each voluntary target switch until the belief argmax first
// names the new target. Switches that are superseded before recovery are
// skipped.
std::vector<std::size_t> switch_recovery_lags(const EpisodeLog& log);

}  // namespace capir
