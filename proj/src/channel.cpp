#include "crsim/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace crsim {

void ChannelParams::validate() const {
  std::ostringstream problems;
  if (levels < 2) problems << "levels must be >= 2; ";
  if (!(rate_step > 0)) problems << "rate_step must be > 0; ";
  if (!(bandwidth > 0)) problems << "bandwidth must be > 0; ";
  if (!(mean_snr > 0)) problems << "mean_snr must be > 0; ";
  if (!(doppler_hz >= 0)) problems << "doppler_hz must be >= 0; ";
  if (!(slot_seconds > 0)) problems << "slot_seconds must be > 0; ";
  const std::string msg = problems.str();
  if (!msg.empty()) throw std::invalid_argument("invalid channel params: " + msg);
}

Thresholds build_thresholds(const ChannelParams& params) {
  params.validate();
  Thresholds t;
  t.bounds.reserve(params.levels + 1);
  for (int k = 0; k < params.levels; ++k) {
    t.bounds.push_back(std::expm1(k * params.rate_step / params.bandwidth));
  }
  t.bounds.push_back(std::numeric_limits<double>::infinity());
  return t;
}

StationaryDist stationary_distribution(const Thresholds& thresholds,
                                       double mean_snr) {
  if (!(mean_snr > 0)) throw std::invalid_argument("mean_snr must be > 0");
  StationaryDist d;
  const int n = thresholds.levels();
  d.pi.reserve(n);
  for (int k = 0; k < n; ++k) {
    // exp(-inf) evaluates to 0, closing the top level.
    d.pi.push_back(std::exp(-thresholds.lower(k) / mean_snr) -
                   std::exp(-thresholds.upper(k) / mean_snr));
  }
  return d;
}

double level_crossing_rate(double boundary_snr, double mean_snr,
                           double doppler_hz) {
  return std::sqrt(2.0 * std::numbers::pi * boundary_snr / mean_snr) *
         doppler_hz * std::exp(-boundary_snr / mean_snr);
}

TransitionMatrix transition_matrix(const ChannelParams& params) {
  params.validate();
  const Thresholds t = build_thresholds(params);
  const StationaryDist d = stationary_distribution(t, params.mean_snr);
  const int n = params.levels;
  TransitionMatrix u(n);
  for (int k = 0; k < n; ++k) {
    double up = 0.0;
    double down = 0.0;
    if (k <= n - 2) {
      up = level_crossing_rate(t.upper(k), params.mean_snr, params.doppler_hz) *
           params.slot_seconds / d.pi[k];
    }
    if (k >= 1) {
      down = level_crossing_rate(t.lower(k), params.mean_snr,
                                 params.doppler_hz) *
             params.slot_seconds / d.pi[k];
    }
    if (up > 1.0 || down > 1.0 || up + down > 1.0) {
      std::ostringstream msg;
      msg << "chain model invalid at level " << k
          << ": off-diagonal transition mass " << (up + down)
          << " exceeds 1 (slot too long or Doppler too high)";
      throw ModelError(msg.str());
    }
    if (k <= n - 2) u.at(k, k + 1) = up;
    if (k >= 1) u.at(k, k - 1) = down;
    u.at(k, k) = 1.0 - up - down;
  }
  return u;
}

int sample_next_level(const TransitionMatrix& transitions, int level,
                      Rng& rng) {
  const int n = transitions.levels();
  const double down = level > 0 ? transitions(level, level - 1) : 0.0;
  const double stay = transitions(level, level);
  const double u = rng.uniform();
  if (level > 0 && u < down) return level - 1;
  if (level + 1 < n && u >= down + stay) return level + 1;
  return level;
}

double sample_snr_in_level(int level, const Thresholds& thresholds,
                           double mean_snr, Rng& rng) {
  const double hi = std::exp(-thresholds.lower(level) / mean_snr);
  const double lo = std::exp(-thresholds.upper(level) / mean_snr);
  const double u = rng.uniform();
  // u = 0 maps to the lower boundary; u -> 1 walks toward the upper one,
  // which is +inf for the top level.
  return -mean_snr * std::log(hi - u * (hi - lo));
}

FsmcModel FsmcModel::build(const ChannelParams& params) {
  FsmcModel m{params, build_thresholds(params), StationaryDist{},
              transition_matrix(params)};
  m.stationary = stationary_distribution(m.thresholds, params.mean_snr);
  return m;
}

}  // namespace crsim
