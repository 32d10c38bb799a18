#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "safetrust/qad.hpp"
#include "safetrust/sim/mote.hpp"
#include "safetrust/sim/observation.hpp"
#include "safetrust/sim/topology.hpp"

namespace safetrust::sim {

enum class Architecture { PeerToPeer, Sink };

std::string_view to_string(Architecture arch);
std::optional<Architecture> parse_architecture(std::string_view name);

/// The sink's address in sink mode.
inline constexpr Address kSinkAddress = 0;

/// Partial update of a link's truth; unset fields are left alone.
struct TruthPatch {
  std::optional<double> link_quality;
  std::optional<double> tx_rate_bps;
  std::optional<double> response_time_ms;
  std::optional<double> uptime;
  std::optional<double> noise;

  bool empty() const;
  void apply(SafetyObservation& truth, double& noise_scale) const;
};

/// Both directions of the link a <-> b.
struct LinkPair {
  Address a = 0;
  Address b = 0;
};
/// Every neighbour's view of `peer`.
struct PeerLinks {
  Address peer = 0;
};
using LinkTarget = std::variant<LinkPair, PeerLinks>;

struct LinkOverride {
  LinkTarget target;
  TruthPatch patch;
};

struct TruthEvent {
  int interval = 0;
  LinkTarget target;
  TruthPatch patch;
};

/// Kills a mote part-way through an interval, after the election. With no
/// address the elected HACP is killed.
struct KillEvent {
  int interval = 0;
  std::optional<Address> addr;
};

struct EnergyConfig {
  double capacity_j = 100.0;
  double initial_j = 100.0;
  double harvest_j_per_s = 0.0;
  EnergyCosts costs{0.01, 0.005, 0.02};
};

struct Scenario {
  std::size_t motes = 10;
  TopologyKind topology = TopologyKind::Ring;
  double radius = 0.3;
  std::uint64_t seed = 1;
  int intervals = 10;

  double theta_base_s = 60.0;
  double theta_min_s = 6.0;
  double theta_max_s = 600.0;
  bool failover = false;
  Architecture architecture = Architecture::PeerToPeer;

  Engine engine = Engine::Qad;
  qad::Operator qad_operator = qad::Operator::ModerateOptimistic;
  AnalysisConfig analysis;

  EnergyConfig energy;

  SafetyObservation link_defaults{0.9, 250'000.0, 20.0, 0.99};
  double link_noise = 0.05;
  std::vector<LinkOverride> link_overrides;
  std::vector<TruthEvent> truth_events;
  std::vector<KillEvent> kill_events;

  /// Throws InvalidScenario naming the first offending key.
  void validate() const;
};

/// A scenario invariant violation. `key()` is "section.key"; for list
/// entries (link overrides, events) `item()` is the index into that list.
class InvalidScenario : public std::invalid_argument {
 public:
  InvalidScenario(std::string key, const std::string& message, std::optional<std::size_t> item = std::nullopt)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)), item_(item) {}

  const std::string& key() const { return key_; }
  std::optional<std::size_t> item() const { return item_; }

 private:
  std::string key_;
  std::optional<std::size_t> item_;
};

}  // namespace safetrust::sim
