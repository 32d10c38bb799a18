#include "safetrust/sim/scenario.hpp"

#include <cmath>
#include <string>

namespace safetrust::sim {

std::string_view to_string(Architecture arch) {
  return arch == Architecture::Sink ? "sink" : "p2p";
}

std::optional<Architecture> parse_architecture(std::string_view name) {
  if (name == "p2p") return Architecture::PeerToPeer;
  if (name == "sink") return Architecture::Sink;
  return std::nullopt;
}

bool TruthPatch::empty() const {
  return !link_quality && !tx_rate_bps && !response_time_ms && !uptime && !noise;
}

void TruthPatch::apply(SafetyObservation& truth, double& noise_scale) const {
  if (link_quality) truth.link_quality = *link_quality;
  if (tx_rate_bps) truth.tx_rate_bps = *tx_rate_bps;
  if (response_time_ms) truth.response_time_ms = *response_time_ms;
  if (uptime) truth.uptime = *uptime;
  if (noise) noise_scale = *noise;
}

namespace {

void require(bool ok, const char* key, const std::string& message,
             std::optional<std::size_t> item = std::nullopt) {
  if (!ok) throw InvalidScenario(key, message, item);
}

bool unit(double v) { return v >= 0.0 && v <= 1.0; }

void check_patch(const TruthPatch& p, const char* key, std::size_t item) {
  require(unit(p.link_quality.value_or(0.0)), key, "link_quality must be in [0, 1]", item);
  require(unit(p.uptime.value_or(0.0)), key, "uptime must be in [0, 1]", item);
  require(p.tx_rate_bps.value_or(0.0) >= 0.0, key, "tx_rate_bps must be >= 0", item);
  require(p.response_time_ms.value_or(0.0) >= 0.0, key, "response_time_ms must be >= 0", item);
  require(p.noise.value_or(0.0) >= 0.0, key, "noise must be >= 0", item);
  require(!p.empty(), key, "no truth fields given", item);
}

void check_target(const LinkTarget& target, std::size_t motes, const char* key, std::size_t item) {
  if (const auto* pair = std::get_if<LinkPair>(&target)) {
    require(pair->a < motes && pair->b < motes, key, "link endpoint outside 0.." + std::to_string(motes - 1), item);
    require(pair->a != pair->b, key, "link endpoints must differ", item);
  } else {
    require(std::get<PeerLinks>(target).peer < motes, key, "peer outside 0.." + std::to_string(motes - 1), item);
  }
}

}  // namespace

void Scenario::validate() const {
  require(motes >= 1, "network.motes", "must be >= 1");
  require(topology != TopologyKind::RandomGeometric || radius > 0.0, "network.radius", "must be > 0");
  require(intervals >= 1, "rwp.intervals", "must be >= 1");
  require(theta_min_s > 0.0, "rwp.theta_min_s", "must be > 0");
  require(theta_base_s >= theta_min_s, "rwp.theta_base_s", "must be >= theta_min_s");
  require(theta_max_s >= theta_base_s, "rwp.theta_max_s", "must be >= theta_base_s");

  double weight_sum = 0.0;
  for (double w : analysis.weights) {
    require(w >= 0.0, "trust.weights", "weights must be non-negative");
    weight_sum += w;
  }
  require(std::abs(weight_sum - 1.0) <= 1e-9, "trust.weights",
          "weights must sum to 1 (got " + std::to_string(weight_sum) + ")");
  require(analysis.misbehavior_threshold > 0.0 && analysis.misbehavior_threshold < 1.0,
          "trust.misbehavior_threshold", "must be in (0, 1)");
  require(analysis.reference.tx_rate_bps > 0.0, "trust.ref_tx_rate_bps", "must be > 0");
  require(analysis.reference.response_time_ms > 0.0, "trust.ref_response_ms", "must be > 0");
  require(analysis.tw.x > 0.0, "trust.tw_x", "must be > 0");
  require(analysis.tw.y > 0.0, "trust.tw_y", "must be > 0");

  require(energy.capacity_j > 0.0, "energy.capacity_j", "must be > 0");
  require(energy.initial_j >= 0.0 && energy.initial_j <= energy.capacity_j, "energy.init_j",
          "must be in [0, capacity_j]");
  require(energy.harvest_j_per_s >= 0.0, "energy.harvest_j_per_s", "must be >= 0");
  require(energy.costs.tx_j >= 0.0, "energy.tx_cost_j", "must be >= 0");
  require(energy.costs.rx_j >= 0.0, "energy.rx_cost_j", "must be >= 0");
  require(energy.costs.compute_j >= 0.0, "energy.compute_cost_j", "must be >= 0");

  require(unit(link_defaults.link_quality), "links.link_quality", "must be in [0, 1]");
  require(link_defaults.tx_rate_bps >= 0.0, "links.tx_rate_bps", "must be >= 0");
  require(link_defaults.response_time_ms >= 0.0, "links.response_time_ms", "must be >= 0");
  require(unit(link_defaults.uptime), "links.uptime", "must be in [0, 1]");
  require(link_noise >= 0.0, "links.noise", "must be >= 0");
  for (std::size_t i = 0; i < link_overrides.size(); ++i) {
    check_target(link_overrides[i].target, motes, "links.link", i);
    check_patch(link_overrides[i].patch, "links.link", i);
  }

  for (std::size_t i = 0; i < truth_events.size(); ++i) {
    const auto& e = truth_events[i];
    require(e.interval >= 0 && e.interval < intervals, "events.link",
            "at=" + std::to_string(e.interval) + " outside 0.." + std::to_string(intervals - 1), i);
    check_target(e.target, motes, "events.link", i);
    check_patch(e.patch, "events.link", i);
    require(!e.patch.noise, "events.link", "noise cannot be scheduled", i);
  }
  for (std::size_t i = 0; i < kill_events.size(); ++i) {
    const auto& k = kill_events[i];
    require(k.interval >= 0 && k.interval < intervals, "events.kill",
            "at=" + std::to_string(k.interval) + " outside 0.." + std::to_string(intervals - 1), i);
    if (k.addr) {
      require(*k.addr < motes, "events.kill", "mote outside 0.." + std::to_string(motes - 1), i);
      require(architecture != Architecture::Sink || *k.addr != kSinkAddress, "events.kill",
              "the sink cannot be killed", i);
    } else {
      require(architecture != Architecture::Sink, "events.kill", "kill=hacp needs the p2p architecture", i);
    }
  }
}

}  // namespace safetrust::sim
