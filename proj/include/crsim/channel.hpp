#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "crsim/rng.hpp"

namespace crsim {

/// Raised when a parameterization violates the finite-state-chain
/// assumptions (per-slot transition probability above one).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters of the quantized Rayleigh-fading primary link.
/// All SNR quantities are linear ratios; dB conversion happens at
/// configuration parsing, never here.
struct ChannelParams {
  int levels = 8;             // number of SNR quality levels
  double rate_step = 3e6;     // rate granularity between adjacent levels [bit/s]
  double bandwidth = 6e6;     // [Hz]
  double mean_snr = 31.6227766016837933;
  double doppler_hz = 0.333555703802535;
  double slot_seconds = 0.1;  // packet/slot duration

  /// Throws std::invalid_argument listing every violated constraint.
  void validate() const;
};

/// levels()+1 SNR boundaries. Level k spans [bounds[k], bounds[k+1]);
/// bounds.front() == 0 and bounds.back() == +infinity.
struct Thresholds {
  std::vector<double> bounds;

  int levels() const { return static_cast<int>(bounds.size()) - 1; }
  double lower(int level) const { return bounds[level]; }
  double upper(int level) const { return bounds[level + 1]; }
};

/// Long-run occupancy probability of each SNR level.
struct StationaryDist {
  std::vector<double> pi;
};

/// Row-stochastic per-slot transition matrix, tridiagonal by construction.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int levels)
      : levels_(levels), p_(static_cast<std::size_t>(levels) * levels, 0.0) {}

  int levels() const { return levels_; }
  double operator()(int from, int to) const {
    return p_[static_cast<std::size_t>(from) * levels_ + to];
  }
  double& at(int from, int to) {
    return p_[static_cast<std::size_t>(from) * levels_ + to];
  }
  const double* row(int from) const {
    return p_.data() + static_cast<std::size_t>(from) * levels_;
  }

 private:
  int levels_;
  std::vector<double> p_;
};

/// SNR boundaries separating adjacent quality levels:
/// bounds[k] = e^{k*rate_step/bandwidth} - 1 for k < levels, then +inf.
Thresholds build_thresholds(const ChannelParams& params);

/// Occupancy of each level under exponentially distributed SNR with the
/// given mean: pi[k] = e^{-bounds[k]/mean} - e^{-bounds[k+1]/mean}.
StationaryDist stationary_distribution(const Thresholds& thresholds,
                                       double mean_snr);

/// Average number of times per second the fading envelope crosses the
/// given SNR boundary, in crossings/s.
double level_crossing_rate(double boundary_snr, double mean_snr,
                           double doppler_hz);

/// Per-slot transition probabilities between adjacent levels. Throws
/// ModelError naming the offending level if any off-diagonal entry or
/// row's off-diagonal sum exceeds one (slot too long or Doppler too high
/// for the adjacent-transfer assumption).
TransitionMatrix transition_matrix(const ChannelParams& params);

/// Advances the chain by one slot; consumes exactly one uniform draw.
int sample_next_level(const TransitionMatrix& transitions, int level,
                      Rng& rng);

/// Instantaneous SNR conditional on the current level: an exponential
/// draw with the given mean truncated to the level's interval.
/// Inverse-CDF method; consumes exactly one uniform draw.
double sample_snr_in_level(int level, const Thresholds& thresholds,
                           double mean_snr, Rng& rng);

/// The derived chain quantities bundled for the simulator. Immutable
/// after build(); safe to share across threads.
struct FsmcModel {
  ChannelParams params;
  Thresholds thresholds;
  StationaryDist stationary;
  TransitionMatrix transitions;

  static FsmcModel build(const ChannelParams& params);
};

}  // namespace crsim
