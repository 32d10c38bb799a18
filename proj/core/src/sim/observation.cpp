#include "safetrust/sim/observation.hpp"

#include <algorithm>
#include <stdexcept>

namespace safetrust::sim {

bool SafetyObservation::valid() const {
  return link_quality >= 0.0 && link_quality <= 1.0 && tx_rate_bps >= 0.0 && response_time_ms >= 0.0 &&
         uptime >= 0.0 && uptime <= 1.0;
}

const SafetyObservation& LinkTruth::at(int interval) const {
  const SafetyObservation* current = &truth;
  for (const auto& [from, t] : schedule) {
    if (from > interval) break;
    current = &t;
  }
  return *current;
}

SafetyObservation observe_link(const LinkTruth& link, int interval, Rng& rng) {
  const SafetyObservation& t = link.at(interval);
  const double s = link.noise;
  SafetyObservation obs;
  obs.link_quality = std::clamp(t.link_quality + rng.uniform(-s, s), 0.0, 1.0);
  obs.tx_rate_bps = std::max(0.0, t.tx_rate_bps * (1.0 + rng.uniform(-s, s)));
  obs.response_time_ms = std::max(0.0, t.response_time_ms * (1.0 + rng.uniform(-s, s)));
  obs.uptime = std::clamp(t.uptime + rng.uniform(-s, s), 0.0, 1.0);
  return obs;
}

double safety_score(const SafetyObservation& obs, const ScoreWeights& weights, const ScoreReference& ref) {
  if (!(ref.tx_rate_bps > 0.0) || !(ref.response_time_ms > 0.0)) {
    throw std::invalid_argument("score references must be positive");
  }
  const double rate = std::min(1.0, obs.tx_rate_bps / ref.tx_rate_bps);
  const double response = std::max(0.0, 1.0 - obs.response_time_ms / ref.response_time_ms);
  const double score =
      weights[0] * obs.link_quality + weights[1] * rate + weights[2] * response + weights[3] * obs.uptime;
  return std::clamp(score, 0.0, 1.0);
}

SafetyObservation silent_observation(const ScoreReference& ref) {
  return {0.0, 0.0, ref.response_time_ms, 0.0};
}

}  // namespace safetrust::sim
