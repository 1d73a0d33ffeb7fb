#pragma once

#include <array>
#include <span>
#include <vector>

#include "capir/ghostbuster.hpp"
#include "capir/planner.hpp"

namespace capir {

// Row-stochastic k x k matrix of subtask switching probabilities,
// entry (from, to).
class SubtaskTransitionMatrix {
 public:
  explicit SubtaskTransitionMatrix(std::vector<std::vector<double>> rows);

  // Self-transition `stay`, the remainder spread evenly over the others.
  static SubtaskTransitionMatrix with_stay_probability(std::size_t k, double stay);

  std::size_t size() const { return rows_.size(); }
  double operator()(std::size_t from, std::size_t to) const {
    return rows_[from][to];
  }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

// Distribution over live subtasks, plus the number of observed steps.
struct Belief {
  std::vector<double> probabilities;
  std::size_t steps = 0;

  static Belief uniform(std::size_t k);
  std::size_t size() const { return probabilities.size(); }
  // Lowest-index maximizer.
  std::size_t argmax() const;
};

struct RationalityModel {
  double beta = 1.0;
};

using HumanLikelihood = std::array<double, kNumHumanActions>;

// P(a_H) proportional to exp(beta * max_{a_AI} Q(s, a_H, a_AI)) over one
// joint-action row of a subtask Q-table.
HumanLikelihood human_action_likelihood(std::span<const double> joint_q_row,
                                        const RationalityModel& model);
// DEAD states give the uniform distribution.
HumanLikelihood human_action_likelihood(const QTable& q,
                                        const SubtaskCodec& codec,
                                        const SubtaskState& state,
                                        const RationalityModel& model);

Belief belief_predict(const Belief& belief, const SubtaskTransitionMatrix& t);

struct BeliefUpdate {
  Belief belief;
  // Set when every likelihood was zero; belief is then the prior.
  bool zero_likelihood = false;
};

// Bayes rule with per-subtask likelihoods of the observed human action.
BeliefUpdate belief_update(const Belief& predicted,
                           std::span<const double> likelihoods);

struct SubtaskSnapshot {
  const QTable* q = nullptr;
  SubtaskState state;
};

BeliefUpdate belief_update(const Belief& predicted, HumanAction observed,
                           std::span<const SubtaskSnapshot> subtasks,
                           const SubtaskCodec& codec,
                           const RationalityModel& model);

struct Retirement {
  Belief belief;
  SubtaskTransitionMatrix transitions;
};

// Drops subtask `dead` and renormalizes the belief and the surviving rows.
// Requires at least two subtasks.
Retirement retire_subtask(const Belief& belief,
                          const SubtaskTransitionMatrix& t, std::size_t dead);

enum class HumanResponseModel {
  // Expected utility under the softmax human model.
  kSoftmax,
  // Utility of the human's best response to each assistant action.
  kBestResponse,
};

// Expected utility of each assistant action; DEAD subtasks contribute 0.
std::array<double, kNumAssistantActions> assistant_action_utilities(
    std::span<const double> belief, std::span<const SubtaskSnapshot> subtasks,
    const SubtaskCodec& codec, const RationalityModel& model,
    HumanResponseModel response = HumanResponseModel::kSoftmax);

// Lowest-index maximizer of assistant_action_utilities.
AssistantAction select_assistant_action(
    std::span<const double> belief, std::span<const SubtaskSnapshot> subtasks,
    const SubtaskCodec& codec, const RationalityModel& model,
    HumanResponseModel response = HumanResponseModel::kSoftmax);

struct TrackerStep {
  Belief belief;                    // posterior after this step's evidence
  std::vector<double> likelihoods;  // P(observed | subtask), live subtasks
  AssistantAction action = AssistantAction::kStay;
  bool zero_likelihood = false;
};

// Online intention tracker for one session: predict, update, then select.
// The cache must outlive the tracker.
class IntentionTracker {
 public:
  IntentionTracker(const PolicyCache& cache, RationalityModel model,
                   HumanResponseModel response = HumanResponseModel::kSoftmax);
  IntentionTracker(const PolicyCache& cache, RationalityModel model,
                   SubtaskTransitionMatrix transitions,
                   HumanResponseModel response = HumanResponseModel::kSoftmax);

  TrackerStep step(HumanAction observed, const WorldState& world);

  // Removes a killed ghost. The last live ghost is never retired.
  void retire(std::size_t ghost);

  const Belief& belief() const { return belief_; }
  const std::vector<std::size_t>& live_ghosts() const { return live_; }
  const SubtaskTransitionMatrix& transitions() const { return transitions_; }
  // Belief indexed by ghost, 0 for retired ghosts.
  std::vector<double> belief_by_ghost() const;

 private:
  std::vector<SubtaskSnapshot> snapshots(const WorldState& world) const;

  const PolicyCache* cache_;
  RationalityModel model_;
  HumanResponseModel response_;
  std::vector<std::size_t> live_;
  Belief belief_;
  SubtaskTransitionMatrix transitions_;
};

// Expected-utility choice when the true target is known (belief one-hot).
AssistantAction oracle_assistant_action(const PolicyCache& cache,
                                        const WorldState& world,
                                        std::size_t target,
                                        const RationalityModel& model);

}  // namespace capir
