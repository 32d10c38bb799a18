#include "safetrust/sim/mote.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace safetrust::sim {

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::Qad: return "qad";
    case Engine::Beta: return "beta";
    case Engine::Bayes: return "bayes";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "qad") return Engine::Qad;
  if (name == "beta") return Engine::Beta;
  if (name == "bayes") return Engine::Bayes;
  return std::nullopt;
}

MoteState::MoteState(Address a, std::vector<Address> nbrs, Engine e, double capacity, double energy,
                     double harvest, double theta_s)
    : addr(a),
      energy_j(energy),
      capacity_j(capacity),
      harvest_j_per_s(harvest),
      engine(e),
      neighbors(std::move(nbrs)),
      rwp(a, theta_s) {
  std::sort(neighbors.begin(), neighbors.end());
}

bool MoteState::is_neighbor(Address peer) const {
  return std::binary_search(neighbors.begin(), neighbors.end(), peer);
}

void analyze(MoteState& mote, Address peer, const SafetyObservation& obs, const AnalysisConfig& config) {
  if (!mote.is_neighbor(peer)) {
    throw std::invalid_argument("mote " + std::to_string(mote.addr) + " has no neighbour " + std::to_string(peer));
  }
  const double score = safety_score(obs, config.weights, config.reference);
  const bool trusted = score >= config.misbehavior_threshold;
  mote.assessments[peer] = qad::quantize_observation(score);

  switch (mote.engine) {
    case Engine::Qad:
      break;
    case Engine::Beta: {
      auto& counts = mote.counts_by_peer[peer];
      counts = tw::update_counts(counts, trusted ? tw::Outcome::Normal : tw::Outcome::Misbehavior);
      break;
    }
    case Engine::Bayes:
      mote.evidence_by_peer[peer].add(trusted, obs.tx_rate_bps > config.reference.tx_rate_bps, obs.uptime > 0.5);
      break;
  }
}

namespace {

// Undefined assessments rank below every defined one.
constexpr double kUnknownAssessment = qad::Assessment::kMin - 1.0;

qad::Assessment lookup(const std::map<Address, qad::Assessment>& row, Address peer) {
  auto it = row.find(peer);
  return it == row.end() ? qad::Assessment::undefined() : it->second;
}

}  // namespace

double trust_metric(const MoteState& mote, Address peer, const AnalysisConfig& config) {
  switch (mote.engine) {
    case Engine::Qad: {
      qad::Assessment a = lookup(mote.served, peer);
      if (!a.defined()) a = lookup(mote.assessments, peer);
      return a.defined() ? static_cast<double>(a.value()) : kUnknownAssessment;
    }
    case Engine::Beta:
      return trust_record(mote, peer, config)->trustworthiness;
    case Engine::Bayes: {
      auto it = mote.evidence_by_peer.find(peer);
      return prob::bayes_posterior2(it == mote.evidence_by_peer.end() ? prob::JointEvidenceCounts{} : it->second);
    }
  }
  return 0.0;
}

std::optional<tw::TrustRecord> trust_record(const MoteState& mote, Address peer, const AnalysisConfig& config) {
  switch (mote.engine) {
    case Engine::Qad:
      return std::nullopt;
    case Engine::Beta: {
      auto it = mote.counts_by_peer.find(peer);
      return tw::evaluate(it == mote.counts_by_peer.end() ? tw::BehaviorCounts{} : it->second, config.tw);
    }
    case Engine::Bayes: {
      auto it = mote.evidence_by_peer.find(peer);
      if (it == mote.evidence_by_peer.end()) return tw::evaluate(tw::BehaviorCounts{}, config.tw);
      const auto& ev = it->second;
      const tw::BehaviorCounts counts(1.0 + static_cast<double>(ev.hypothesis_count(true)),
                                      1.0 + static_cast<double>(ev.hypothesis_count(false)));
      return tw::evaluate(counts, config.tw);
    }
  }
  return std::nullopt;
}

Address select_peer(const MoteState& mote, std::span<const Address> candidates, const AnalysisConfig& config) {
  std::optional<Address> best;
  double best_metric = 0.0;
  for (Address c : candidates) {
    if (c == mote.addr) continue;
    if (!mote.is_neighbor(c)) {
      throw std::invalid_argument("candidate " + std::to_string(c) + " is not adjacent to mote " +
                                  std::to_string(mote.addr));
    }
    const double m = trust_metric(mote, c, config);
    if (!best || m > best_metric || (m == best_metric && c < *best)) {
      best = c;
      best_metric = m;
    }
  }
  if (!best) throw std::invalid_argument("select_peer: no candidates");
  return *best;
}

void charge_energy(MoteState& mote, Action action, const EnergyCosts& costs) {
  if (!mote.alive || mote.unconstrained) return;
  double cost = 0.0;
  switch (action) {
    case Action::Transmit: cost = costs.tx_j; break;
    case Action::Receive: cost = costs.rx_j; break;
    case Action::Compute: cost = costs.compute_j; break;
  }
  mote.energy_j = std::max(0.0, mote.energy_j - cost);
  if (mote.energy_j <= 0.0) mote.alive = false;
}

void credit_harvest(MoteState& mote, double seconds) {
  if (!mote.alive || mote.unconstrained) return;
  mote.energy_j = std::min(mote.capacity_j, mote.energy_j + mote.harvest_j_per_s * seconds);
}

}  // namespace safetrust::sim
