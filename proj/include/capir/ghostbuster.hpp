#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "capir/grid.hpp"
#include "capir/level.hpp"
#include "capir/mdp.hpp"

namespace capir {

enum class HumanAction : std::uint8_t { kNorth = 0, kSouth, kEast, kWest, kStay, kShoot };
enum class AssistantAction : std::uint8_t { kNorth = 0, kSouth, kEast, kWest, kStay };

inline constexpr std::size_t kNumHumanActions = 6;
inline constexpr std::size_t kNumAssistantActions = 5;
inline constexpr std::size_t kNumJointActions =
    kNumHumanActions * kNumAssistantActions;

inline constexpr std::array<HumanAction, kNumHumanActions> kHumanActions = {
    HumanAction::kNorth, HumanAction::kSouth, HumanAction::kEast,
    HumanAction::kWest,  HumanAction::kStay,  HumanAction::kShoot};
inline constexpr std::array<AssistantAction, kNumAssistantActions>
    kAssistantActions = {AssistantAction::kNorth, AssistantAction::kSouth,
                         AssistantAction::kEast, AssistantAction::kWest,
                         AssistantAction::kStay};

std::string_view to_string(HumanAction a);
std::string_view to_string(AssistantAction a);
// Parses the wire names "N", "S", "E", "W", "STAY", "SHOOT".
std::optional<HumanAction> parse_human_action(std::string_view name);
std::optional<AssistantAction> parse_assistant_action(std::string_view name);

struct ActionPair {
  HumanAction human = HumanAction::kStay;
  AssistantAction assistant = AssistantAction::kStay;
  friend bool operator==(const ActionPair&, const ActionPair&) = default;
};

// Joint action index used by subtask MDPs: human * 5 + assistant.
constexpr ActionIndex joint_index(HumanAction h, AssistantAction a) {
  return static_cast<ActionIndex>(h) * kNumAssistantActions +
         static_cast<ActionIndex>(a);
}
constexpr ActionPair split_joint(ActionIndex joint) {
  return {static_cast<HumanAction>(joint / kNumAssistantActions),
          static_cast<AssistantAction>(joint % kNumAssistantActions)};
}

// Movement shared by both protagonists. Blocked moves, STAY and SHOOT keep
// the current cell.
CellId protagonist_move(const GridMap& map, CellId pos, HumanAction move);
CellId protagonist_move(const GridMap& map, CellId pos, AssistantAction move);

struct SubtaskState {
  CellId human = 0;
  CellId assistant = 0;
  std::optional<CellId> ghost;  // nullopt once the ghost is dead

  bool dead() const { return !ghost.has_value(); }
  friend bool operator==(const SubtaskState&, const SubtaskState&) = default;
};

struct GhostState {
  CellId pos = 0;
  bool alive = true;
  friend bool operator==(const GhostState&, const GhostState&) = default;
};

struct WorldState {
  CellId human = 0;
  CellId assistant = 0;
  std::vector<GhostState> ghosts;

  std::size_t live_ghosts() const;
  bool all_dead() const { return live_ghosts() == 0; }
  friend bool operator==(const WorldState&, const WorldState&) = default;
};

WorldState initial_world(const Level& level);

// Bijection between SubtaskState and [0, m*m*(m+1)); ghost slot m is DEAD.
class SubtaskCodec {
 public:
  explicit SubtaskCodec(std::size_t num_cells) : m_(num_cells) {}

  std::size_t num_cells() const { return m_; }
  std::size_t num_states() const { return m_ * m_ * (m_ + 1); }
  StateIndex encode(const SubtaskState& s) const;
  SubtaskState decode(StateIndex index) const;

 private:
  std::size_t m_;
};

struct CellProbability {
  CellId cell = 0;
  double probability = 0.0;
};

// Distribution of a live ghost's next cell given protagonist positions.
// Entries are sorted by cell and merged.
std::vector<CellProbability> ghost_transition(const GridMap& map,
                                              const GameParams& params,
                                              CellId human, CellId assistant,
                                              CellId ghost);
std::vector<CellProbability> ghost_transition(const GridMap& map,
                                              const GameParams& params,
                                              const SubtaskState& state);

struct SubtaskOutcome {
  SubtaskState state;
  double probability = 0.0;
  double reward = 0.0;
};

// One step of the single-ghost game: protagonists move, SHOOT in range
// kills (reward 1), otherwise the ghost moves.
std::vector<SubtaskOutcome> subtask_step(const GridMap& map,
                                         const GameParams& params,
                                         const SubtaskState& state,
                                         ActionPair actions);

// Reward for killing a ghost.
inline constexpr double kKillReward = 1.0;

struct SubtaskModel {
  Mdp mdp;
  SubtaskCodec codec;
};

SubtaskModel build_subtask_mdp(const GridMap& map, const GameParams& params);

}  // namespace capir
