#pragma once

#include <vector>

#include "crsim/channel.hpp"

namespace crsim {

/// Probability vector over the primary link's quality levels, maintained
/// by the secondary user in place of the unobservable true level.
struct Belief {
  std::vector<double> beta;
};

/// Target rates and the equivalent SNR outage thresholds.
struct OutageModel {
  double pu_target_rate;  // [bit/s/Hz]
  double su_target_rate;
  double rho_pu;          // 2^rate - 1, linear SNR
  double rho_su;
  double snr_threshold;   // outage boundary for the primary link == rho_pu

  static OutageModel from_target_rates(double pu_rate, double su_rate);
};

enum class Action { Cooperate, Underlay };

/// Per-level expected rewards for the two busy-slot actions. The level
/// containing the outage threshold gets the conditional (within-level)
/// outage probability under the truncated-exponential SNR model.
struct RewardTable {
  std::vector<double> cooperate_magnitude;  // configurable weights
  std::vector<double> underlay_magnitude;
  std::vector<double> outage_probability;   // P(SNR < threshold | level)
  std::vector<double> cooperate_reward;     // magnitude * p_out
  std::vector<double> underlay_reward;      // magnitude * (1 - p_out)
};

/// Starting belief: the chain's stationary law.
Belief init_belief(const StationaryDist& stationary);

/// Feedback branch: the overheard level pins the state, so the next-slot
/// belief is that level's transition row. The prior is discarded.
Belief update_on_observation(const Belief& prior, int observed_level,
                             const TransitionMatrix& transitions);

/// No-feedback branch: one-step Markov prediction beta' = beta * U.
Belief update_blind(const Belief& prior, const TransitionMatrix& transitions);

/// Throws std::invalid_argument on negative magnitudes or length mismatch.
RewardTable build_reward_table(const Thresholds& thresholds,
                               const OutageModel& outage, double mean_snr,
                               std::vector<double> cooperate_magnitude,
                               std::vector<double> underlay_magnitude);

double expected_reward(const Belief& belief, const RewardTable& table,
                       Action action);

/// Greedy rule: the action with the larger expected reward; ties resolve
/// to Cooperate.
Action select_action(const Belief& belief, const RewardTable& table);

}  // namespace crsim
