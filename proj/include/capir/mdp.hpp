#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace capir {

using StateIndex = std::uint32_t;
using ActionIndex = std::uint32_t;

// Thrown when an Mdp fails validation at construction time.
class InvalidMdp : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Transition {
  StateIndex next = 0;
  double probability = 0.0;
  double reward = 0.0;
};

// Finite tabular MDP with sparse transitions stored row-per-(state, action)
// in compressed form. Rewards are attached to (s, a, s') triples.
class Mdp {
 public:
  class Builder;

  // Convenience constructor: rows[s][a] is the successor list of (s, a).
  Mdp(std::size_t num_states, std::size_t num_actions, double discount,
      const std::vector<std::vector<std::vector<Transition>>>& rows);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }
  double discount() const { return discount_; }
  std::size_t num_transitions() const { return next_.size(); }

  std::span<const StateIndex> next_states(StateIndex s, ActionIndex a) const;
  std::span<const double> probabilities(StateIndex s, ActionIndex a) const;
  std::span<const double> rewards(StateIndex s, ActionIndex a) const;

  double max_abs_reward() const;

 private:
  Mdp() = default;
  void validate() const;
  std::size_t row(StateIndex s, ActionIndex a) const {
    return static_cast<std::size_t>(s) * num_actions_ + a;
  }

  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  double discount_ = 0.0;
  std::vector<std::size_t> row_offsets_;  // size num_states*num_actions + 1
  std::vector<StateIndex> next_;
  std::vector<double> probability_;
  std::vector<double> reward_;
};

// Appends rows in state-major, action-minor order; build() validates.
class Mdp::Builder {
 public:
  Builder(std::size_t num_states, std::size_t num_actions, double discount);

  void reserve(std::size_t num_transitions);
  // Appends the successor list of the next (state, action) row.
  void add_row(std::span<const Transition> successors);
  Mdp build() &&;

 private:
  Mdp mdp_;
};

class ValueFunction {
 public:
  ValueFunction() = default;
  explicit ValueFunction(std::vector<double> values)
      : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double operator[](StateIndex s) const { return values_[s]; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Row-major Q values, one row of num_actions entries per state.
class QTable {
 public:
  QTable() = default;
  QTable(std::size_t num_states, std::size_t num_actions,
         std::vector<double> values);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }
  double operator()(StateIndex s, ActionIndex a) const {
    return values_[static_cast<std::size_t>(s) * num_actions_ + a];
  }
  std::span<const double> row(StateIndex s) const {
    return {values_.data() + static_cast<std::size_t>(s) * num_actions_,
            num_actions_};
  }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  std::vector<double> values_;
};

struct SolveOptions {
  double epsilon = 1e-6;
  std::size_t max_iterations = 10000;
  // Keep the per-sweep residuals in the report.
  bool record_residuals = false;
};

struct SolveReport {
  std::size_t iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
  std::chrono::nanoseconds wall_time{0};
  std::vector<double> residuals;
};

struct Solution {
  ValueFunction values;
  SolveReport report;
};

// Jacobi value iteration from V0 = 0. Stops when the infinity-norm of the
// difference between successive sweeps is <= epsilon, or after
// max_iterations sweeps (report.converged == false).
Solution value_iteration(const Mdp& mdp, const SolveOptions& options = {});

// Q(s,a) = sum_s' T(s,a,s') * (R(s,a,s') + discount * v(s')).
QTable compute_q(const Mdp& mdp, const ValueFunction& v);

// Lowest-index maximizer of q.row(state).
ActionIndex greedy_action(const QTable& q, StateIndex state);
ActionIndex greedy_action(std::span<const double> action_values);

}  // namespace capir
