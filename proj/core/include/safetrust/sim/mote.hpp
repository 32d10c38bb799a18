#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "safetrust/bayes.hpp"
#include "safetrust/qad.hpp"
#include "safetrust/rwp.hpp"
#include "safetrust/sim/observation.hpp"
#include "safetrust/trustworthiness.hpp"

namespace safetrust::sim {

using rwp::Address;

enum class Engine { Qad, Beta, Bayes };

std::string_view to_string(Engine engine);
std::optional<Engine> parse_engine(std::string_view name);

enum class Action { Transmit, Receive, Compute };

struct EnergyCosts {
  double tx_j = 0.0;
  double rx_j = 0.0;
  double compute_j = 0.0;
};

/// Everything `analyze` and peer selection need besides the mote itself.
struct AnalysisConfig {
  ScoreWeights weights{0.25, 0.25, 0.25, 0.25};
  ScoreReference reference;
  double misbehavior_threshold = 0.5;
  tw::TrustworthinessParams tw;
};

struct MoteState {
  Address addr = 0;
  double energy_j = 0.0;
  double capacity_j = 0.0;
  double harvest_j_per_s = 0.0;
  bool alive = true;
  bool unconstrained = false;  // sink nodes never spend or run out of energy
  Engine engine = Engine::Qad;
  std::vector<Address> neighbors;  // sorted
  rwp::RwpState rwp;

  // Latest own assessment of each neighbour on the QAD scale. Kept under
  // every engine because the neighbourhood matrix is built from it.
  std::map<Address, qad::Assessment> assessments;
  // This interval's row of the society matrix, as served by the HACP.
  std::map<Address, qad::Assessment> served;
  std::map<Address, tw::BehaviorCounts> counts_by_peer;
  std::map<Address, prob::JointEvidenceCounts> evidence_by_peer;

  MoteState(Address a, std::vector<Address> nbrs, Engine e, double capacity, double energy, double harvest,
            double theta_s);

  bool is_neighbor(Address peer) const;
};

/// Folds one observation of `peer` into the mote's trust state. Throws
/// std::invalid_argument when `peer` is not a neighbour.
void analyze(MoteState& mote, Address peer, const SafetyObservation& obs, const AnalysisConfig& config);

/// The engine's scalar trust in `peer`: the QAD assessment (served value
/// first, own otherwise; undefined ranks below -2), Beta trustworthiness
/// T, or the Bayesian posterior.
double trust_metric(const MoteState& mote, Address peer, const AnalysisConfig& config);

/// (t, sigma, c, T) for Beta and Bayes engines; nothing under QAD. The
/// Bayes engine reads its A and B from the H column of its evidence.
std::optional<tw::TrustRecord> trust_record(const MoteState& mote, Address peer, const AnalysisConfig& config);

/// Argmax of trust_metric over the candidates, lowest address on ties;
/// the mote itself is never chosen. Throws on an empty candidate set.
Address select_peer(const MoteState& mote, std::span<const Address> candidates, const AnalysisConfig& config);

/// Spends the action's cost, flooring at zero. A mote that reaches zero
/// dies; dead or unconstrained motes are unaffected.
void charge_energy(MoteState& mote, Action action, const EnergyCosts& costs);

/// Credits harvest for `seconds` of simulated time, capped at capacity.
/// Dead motes stay dead.
void credit_harvest(MoteState& mote, double seconds);

}  // namespace safetrust::sim
