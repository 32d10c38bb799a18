#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "safetrust/rwp.hpp"
#include "safetrust/sim/mote.hpp"
#include "safetrust/trustworthiness.hpp"

namespace safetrust::sim {

struct MoteRecord {
  Address addr = 0;
  bool alive = true;
  double energy_j = 0.0;
  std::optional<int> pcp;  // unset when the mote did not monitor this interval
  std::optional<int> roc;
  bool is_hacp = false;    // served as HACP this interval
  std::optional<Address> selected_peer;
};

struct PairRecord {
  Address src = 0;
  Address dst = 0;
  double engine_metric = 0.0;
  std::optional<tw::TrustRecord> trust;  // unset under QAD
};

struct MessageStats {
  std::uint64_t flood_messages = 0;
  std::uint64_t flood_transmissions = 0;
  std::uint64_t flood_receptions = 0;
  std::uint64_t flood_duplicates = 0;
  int flood_max_hops = 0;
  std::uint64_t minors_uploaded = 0;
  std::uint64_t queries_answered = 0;
  std::uint64_t app_sent = 0;
  std::uint64_t app_delivered = 0;
  std::uint64_t app_dropped = 0;
  std::uint64_t app_hops = 0;
};

struct IntervalRecord {
  int index = 0;
  double theta_s = 0.0;
  double theta_next_s = 0.0;
  // Announcements delivered to at least one live mote, by address.
  std::vector<rwp::Announcement> announcements;
  std::optional<Address> elected;
  std::optional<Address> backup;
  std::optional<Address> active_hacp;  // who actually served
  bool service_gap = false;
  std::vector<MoteRecord> motes;
  std::vector<PairRecord> pairs;
  MessageStats messages;
  double harvested_j = 0.0;
};

struct SimulationTrace {
  std::size_t motes = 0;
  Engine engine = Engine::Qad;
  std::vector<IntervalRecord> intervals;
};

}  // namespace safetrust::sim
