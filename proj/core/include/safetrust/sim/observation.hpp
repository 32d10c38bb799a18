#pragma once

#include <array>
#include <utility>
#include <vector>

#include "safetrust/rng.hpp"

namespace safetrust::sim {

/// The four safety parameters a mote measures on each neighbour.
struct SafetyObservation {
  double link_quality = 1.0;      // [0, 1]
  double tx_rate_bps = 0.0;       // >= 0
  double response_time_ms = 0.0;  // >= 0
  double uptime = 1.0;            // [0, 1]

  bool valid() const;
  friend bool operator==(const SafetyObservation&, const SafetyObservation&) = default;
};

/// Ground truth for one directed observer -> peer link, with the schedule
/// of truth changes keyed by interval index (ascending).
struct LinkTruth {
  SafetyObservation truth;
  double noise = 0.0;
  std::vector<std::pair<int, SafetyObservation>> schedule;

  /// The truth in force during `interval`.
  const SafetyObservation& at(int interval) const;
};

/// Truth perturbed by independent uniform noise on each field: additive
/// U(-s, s) for the unit-interval fields, multiplicative (1 + U(-s, s)) for
/// rate and response time. Results are clamped back into range. Always
/// draws four values, so the stream stays aligned whatever the noise.
SafetyObservation observe_link(const LinkTruth& link, int interval, Rng& rng);

/// Normalisers for the rate and response-time terms of the safety score.
struct ScoreReference {
  double tx_rate_bps = 200'000.0;
  double response_time_ms = 100.0;
};

using ScoreWeights = std::array<double, 4>;  // link quality, rate, response, uptime

/// Weighted sum of link_quality, min(1, rate/ref), max(0, 1 - response/ref)
/// and uptime, in [0, 1].
double safety_score(const SafetyObservation& obs, const ScoreWeights& weights, const ScoreReference& ref);

/// What a poller records for a neighbour that does not answer.
SafetyObservation silent_observation(const ScoreReference& ref);

}  // namespace safetrust::sim
