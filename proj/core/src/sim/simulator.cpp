#include "safetrust/sim/simulator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace safetrust::sim {

namespace {

using qad::Assessment;

const Assessment kSelfAssessment = Assessment::of(Assessment::kMax);

// Announcement ids are interval * motes + origin; major-matrix bulletins
// live in a disjoint id range.
constexpr std::uint64_t kBulletinIdBit = std::uint64_t{1} << 63;

class Simulation {
 public:
  explicit Simulation(const Scenario& scenario);

  SimulationTrace run();

 private:
  struct FloodResult {
    std::vector<bool> reached;
  };

  bool alive(Address a) const { return motes_[a].alive; }

  // Performs the action if the mote is alive beforehand; returns whether it did.
  bool act(Address a, Action action) {
    if (!alive(a)) return false;
    charge_energy(motes_[a], action, scenario_.energy.costs);
    return true;
  }

  void build_links();
  const LinkTruth& link(Address observer, Address peer) const { return links_.at({observer, peer}); }

  void monitor(int interval);
  void form_minor(MoteState& mote);
  FloodResult flood(const rwp::FloodMessage& msg, IntervalRecord& rec);
  bool unicast(const std::vector<Address>& path);
  void announce_and_elect(int interval, IntervalRecord& rec);
  void serve(int interval, IntervalRecord& rec);
  void select_and_route(IntervalRecord& rec);
  void record(IntervalRecord& rec) const;

  const Scenario& scenario_;
  Rng rng_;
  Topology topology_;
  std::vector<MoteState> motes_;
  std::map<std::pair<Address, Address>, LinkTruth> links_;
  double theta_;

  // Per-interval scratch.
  std::vector<std::map<Address, int>> received_;  // announcements seen by each mote
  std::vector<std::set<std::uint64_t>> seen_ids_;  // flood msg_ids each mote has processed
  std::vector<bool> monitored_;
  std::vector<bool> in_sync_;  // local election agrees with the society-wide one
  std::vector<std::optional<Address>> selected_;
};

Topology make_topology(const Scenario& s, Rng& rng) {
  switch (s.topology) {
    case TopologyKind::Ring: return Topology::ring(s.motes);
    case TopologyKind::Grid: return Topology::grid(s.motes);
    case TopologyKind::RandomGeometric: return Topology::random_geometric(s.motes, s.radius, rng);
  }
  return Topology::ring(s.motes);
}

Simulation::Simulation(const Scenario& scenario)
    : scenario_(scenario), rng_(scenario.seed), topology_(make_topology(scenario, rng_)), theta_(scenario.theta_base_s) {
  const auto& e = scenario.energy;
  motes_.reserve(scenario.motes);
  for (Address a = 0; a < scenario.motes; ++a) {
    const auto nbrs = topology_.neighbors(a);
    motes_.emplace_back(a, std::vector<Address>(nbrs.begin(), nbrs.end()), scenario.engine, e.capacity_j, e.initial_j,
                        e.harvest_j_per_s, scenario.theta_base_s);
  }
  if (scenario.architecture == Architecture::Sink) {
    auto& sink = motes_[kSinkAddress];
    sink.unconstrained = true;
    sink.energy_j = sink.capacity_j;
  }
  build_links();
}

void Simulation::build_links() {
  for (Address a = 0; a < scenario_.motes; ++a) {
    for (Address b : topology_.neighbors(a)) {
      links_[{a, b}] = LinkTruth{scenario_.link_defaults, scenario_.link_noise, {}};
    }
  }

  auto for_each_link = [this](const LinkTarget& target, auto&& fn) {
    if (const auto* pair = std::get_if<LinkPair>(&target)) {
      for (auto key : {std::pair{pair->a, pair->b}, std::pair{pair->b, pair->a}}) {
        if (auto it = links_.find(key); it != links_.end()) fn(it->second);
      }
    } else {
      const Address peer = std::get<PeerLinks>(target).peer;
      for (Address observer : topology_.neighbors(peer)) fn(links_.at({observer, peer}));
    }
  };

  for (const auto& o : scenario_.link_overrides) {
    for_each_link(o.target, [&](LinkTruth& l) { o.patch.apply(l.truth, l.noise); });
  }

  std::vector<const TruthEvent*> events;
  for (const auto& e : scenario_.truth_events) events.push_back(&e);
  std::stable_sort(events.begin(), events.end(),
                   [](const TruthEvent* x, const TruthEvent* y) { return x->interval < y->interval; });
  for (const TruthEvent* e : events) {
    for_each_link(e->target, [&](LinkTruth& l) {
      SafetyObservation next = l.schedule.empty() ? l.truth : l.schedule.back().second;
      double unused_noise = l.noise;
      e->patch.apply(next, unused_noise);
      l.schedule.emplace_back(e->interval, next);
    });
  }
}

void Simulation::monitor(int interval) {
  const auto& cfg = scenario_.analysis;
  for (auto& mote : motes_) {
    if (!act(mote.addr, Action::Compute)) continue;
    for (Address peer : mote.neighbors) {
      if (!act(mote.addr, Action::Transmit)) break;
      SafetyObservation obs = silent_observation(cfg.reference);
      if (act(peer, Action::Receive) && act(peer, Action::Transmit) && act(mote.addr, Action::Receive)) {
        obs = observe_link(link(mote.addr, peer), interval, rng_);
      }
      if (!mote.alive) break;
      analyze(mote, peer, obs, cfg);
    }
  }

  for (auto& mote : motes_) {
    if (!mote.alive) continue;
    form_minor(mote);
    mote.rwp.set_pcp(rwp::compute_pcp(mote.energy_j, mote.harvest_j_per_s, theta_, mote.capacity_j));
    monitored_[mote.addr] = true;
  }
}

void Simulation::form_minor(MoteState& mote) {
  std::vector<Address> members = mote.neighbors;
  members.insert(std::upper_bound(members.begin(), members.end(), mote.addr), mote.addr);
  rwp::NeighborhoodMatrix minor(members);

  for (std::size_t r = 0; r < members.size(); ++r) {
    const MoteState& rower = motes_[members[r]];
    if (!rower.alive) continue;
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (members[c] == rower.addr) {
        minor.matrix.set(r, c, kSelfAssessment);
      } else if (auto it = rower.assessments.find(members[c]); it != rower.assessments.end()) {
        minor.matrix.set(r, c, it->second);
      }
    }
  }

  const auto& prev = mote.rwp.a_minor();
  mote.rwp.set_roc(prev && prev->members == minor.members ? qad::rate_of_change(prev->matrix, minor.matrix)
                                                          : rwp::kScaleMin);
  mote.rwp.set_minor(std::move(minor));
}

// Duplicate-suppressed broadcast: every live mote processes a msg_id at
// most once and relays it while the hop count stays below the mote count.
Simulation::FloodResult Simulation::flood(const rwp::FloodMessage& msg, IntervalRecord& rec) {
  auto& stats = rec.messages;
  const Address origin = msg.origin;
  FloodResult result{std::vector<bool>(motes_.size(), false)};
  result.reached[origin] = true;
  seen_ids_[origin].insert(msg.msg_id);
  if (!act(origin, Action::Transmit)) return result;
  ++stats.flood_messages;
  ++stats.flood_transmissions;

  const int hop_cap = static_cast<int>(motes_.size());
  std::deque<std::pair<Address, int>> frontier{{origin, msg.hop_count}};
  while (!frontier.empty()) {
    const auto [sender, hops] = frontier.front();
    frontier.pop_front();
    for (Address nb : topology_.neighbors(sender)) {
      if (!act(nb, Action::Receive)) continue;
      ++stats.flood_receptions;
      if (!seen_ids_[nb].insert(msg.msg_id).second) {
        ++stats.flood_duplicates;
        continue;
      }
      result.reached[nb] = true;
      stats.flood_max_hops = std::max(stats.flood_max_hops, hops + 1);
      if (hops + 1 < hop_cap && act(nb, Action::Transmit)) {
        ++stats.flood_transmissions;
        frontier.emplace_back(nb, hops + 1);
      }
    }
  }
  return result;
}

bool Simulation::unicast(const std::vector<Address>& path) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!act(path[k], Action::Transmit)) return false;
    if (!act(path[k + 1], Action::Receive)) return false;
  }
  return true;
}

void Simulation::announce_and_elect(int interval, IntervalRecord& rec) {
  const bool sink_mode = scenario_.architecture == Architecture::Sink;
  for (auto& mote : motes_) {
    if (mote.alive) mote.rwp.advance(rwp::Phase::Announcing);
  }

  if (!sink_mode) {
    for (auto& mote : motes_) {
      if (!mote.alive) continue;
      const rwp::FloodMessage msg{mote.addr, mote.rwp.pcp(),
                                  static_cast<std::uint64_t>(interval) * motes_.size() + mote.addr, 0};
      const FloodResult fr = flood(msg, rec);
      for (Address a = 0; a < motes_.size(); ++a) {
        if (fr.reached[a]) received_[a][msg.origin] = msg.pcp;
      }
    }
  }

  for (auto& mote : motes_) {
    if (mote.alive) mote.rwp.advance(rwp::Phase::Electing);
  }

  if (sink_mode) {
    rec.elected = kSinkAddress;
    for (auto& mote : motes_) in_sync_[mote.addr] = mote.alive;
    return;
  }

  std::map<Address, int> delivered;
  for (Address a = 0; a < motes_.size(); ++a) {
    for (const auto& [origin, pcp] : received_[a]) delivered[origin] = pcp;
  }
  for (const auto& [addr, pcp] : delivered) rec.announcements.push_back({addr, pcp});
  if (rec.announcements.empty()) return;

  const rwp::Election society = rwp::elect_with_backup(rec.announcements);
  rec.elected = society.primary;
  if (scenario_.failover) rec.backup = society.backup;

  for (auto& mote : motes_) {
    if (!mote.alive) continue;
    std::vector<rwp::Announcement> local;
    for (const auto& [addr, pcp] : received_[mote.addr]) local.push_back({addr, pcp});
    in_sync_[mote.addr] = rwp::elect_hacp(local) == society.primary;
  }
}

void Simulation::serve(int interval, IntervalRecord& rec) {
  for (auto& mote : motes_) {
    if (!mote.alive) continue;
    mote.rwp.advance(rwp::Phase::Serving);
    if (rec.elected && in_sync_[mote.addr]) mote.rwp.set_hacp(*rec.elected, rec.backup);
  }

  // Scripted failures strike after the election.
  for (const auto& k : scenario_.kill_events) {
    if (k.interval != interval) continue;
    const std::optional<Address> victim = k.addr ? k.addr : rec.elected;
    if (victim && !motes_[*victim].unconstrained) motes_[*victim].alive = false;
  }

  rec.theta_next_s = theta_;
  if (rec.elected) {
    rec.active_hacp = rwp::failover(*rec.elected, rec.backup, [this](Address a) { return alive(a); });
  }
  if (!rec.active_hacp) {
    rec.service_gap = true;
    return;
  }
  const Address hacp = *rec.active_hacp;
  auto usable = [this](Address a) { return alive(a); };

  std::vector<rwp::MinorUpload> uploads;
  std::vector<int> rocs;
  for (auto& mote : motes_) {
    if (!mote.alive || !in_sync_[mote.addr] || !mote.rwp.a_minor()) continue;
    if (mote.addr != hacp) {
      const auto path = topology_.shortest_path(mote.addr, hacp, usable);
      if (!path || !unicast(*path)) continue;
      ++rec.messages.minors_uploaded;
    }
    uploads.push_back({mote.addr, *mote.rwp.a_minor(), scenario_.qad_operator});
    rocs.push_back(mote.rwp.roc());
  }
  for (std::size_t k = 0; k < uploads.size(); ++k) act(hacp, Action::Compute);
  if (!alive(hacp) || uploads.empty()) {
    rec.active_hacp.reset();
    rec.service_gap = true;
    return;
  }

  const double theta_next =
      rwp::next_interval(rocs, scenario_.theta_base_s, {scenario_.theta_min_s, scenario_.theta_max_s});
  std::vector<Address> society(motes_.size());
  for (Address a = 0; a < society.size(); ++a) society[a] = a;
  const rwp::MajorMatrix major = rwp::aggregate_major(uploads, society, interval, theta_next, rng_);
  rec.theta_next_s = theta_next;

  // Major matrix and next interval go out society-wide.
  const rwp::FloodMessage bulletin{hacp, motes_[hacp].rwp.pcp(), kBulletinIdBit | static_cast<std::uint64_t>(interval), 0};
  const FloodResult broadcast = flood(bulletin, rec);
  for (auto& mote : motes_) {
    if (!mote.alive || !broadcast.reached[mote.addr]) continue;
    for (Address peer : mote.neighbors) mote.served[peer] = major.a_major.at(mote.addr, peer);

    if (mote.addr == hacp) continue;
    const auto path = topology_.shortest_path(mote.addr, hacp, usable);
    if (!path) continue;
    std::vector<Address> back(path->rbegin(), path->rend());
    if (!unicast(*path) || !unicast(back)) continue;
    for (Address peer : mote.neighbors) (void)rwp::handle_query(major, peer);
    ++rec.messages.queries_answered;
  }
}

void Simulation::select_and_route(IntervalRecord& rec) {
  const auto& cfg = scenario_.analysis;
  for (auto& mote : motes_) {
    if (!mote.alive) continue;
    std::vector<Address> candidates;
    for (Address nb : mote.neighbors) {
      if (alive(nb)) candidates.push_back(nb);
    }
    if (!candidates.empty()) selected_[mote.addr] = select_peer(mote, candidates, cfg);
  }

  // One application message per live mote toward the serving HACP, routed
  // greedily along the most trusted unvisited neighbour.
  auto& stats = rec.messages;
  const std::optional<Address> dest = rec.active_hacp;
  const int hop_cap = static_cast<int>(motes_.size());
  for (auto& mote : motes_) {
    if (!mote.alive || (dest && *dest == mote.addr)) continue;
    ++stats.app_sent;
    if (!dest || !alive(*dest)) {
      ++stats.app_dropped;
      continue;
    }
    std::set<Address> visited{mote.addr};
    Address cur = mote.addr;
    bool delivered = false;
    for (int hops = 0; hops < hop_cap; ++hops) {
      Address next;
      if (topology_.adjacent(cur, *dest)) {
        next = *dest;
      } else {
        std::vector<Address> candidates;
        for (Address nb : topology_.neighbors(cur)) {
          if (alive(nb) && !visited.count(nb)) candidates.push_back(nb);
        }
        if (candidates.empty()) break;
        next = select_peer(motes_[cur], candidates, cfg);
      }
      if (!act(cur, Action::Transmit) || !act(next, Action::Receive)) break;
      ++stats.app_hops;
      if (next == *dest) {
        delivered = true;
        break;
      }
      visited.insert(next);
      cur = next;
    }
    ++(delivered ? stats.app_delivered : stats.app_dropped);
  }
}

void Simulation::record(IntervalRecord& rec) const {
  const auto& cfg = scenario_.analysis;
  for (const auto& mote : motes_) {
    MoteRecord m;
    m.addr = mote.addr;
    m.alive = mote.alive;
    m.energy_j = mote.energy_j;
    if (monitored_[mote.addr]) {
      m.pcp = mote.rwp.pcp();
      m.roc = mote.rwp.roc();
    }
    m.is_hacp = rec.active_hacp == mote.addr;
    m.selected_peer = selected_[mote.addr];
    rec.motes.push_back(m);

    if (!mote.alive) continue;
    for (Address peer : mote.neighbors) {
      if (mote.engine == Engine::Qad) {
        auto it = mote.served.find(peer);
        Assessment a = it != mote.served.end() ? it->second : Assessment::undefined();
        if (!a.defined()) {
          auto own = mote.assessments.find(peer);
          if (own != mote.assessments.end()) a = own->second;
        }
        if (!a.defined()) continue;
        rec.pairs.push_back({mote.addr, peer, static_cast<double>(a.value()), std::nullopt});
      } else {
        rec.pairs.push_back({mote.addr, peer, trust_metric(mote, peer, cfg), trust_record(mote, peer, cfg)});
      }
    }
  }
}

SimulationTrace Simulation::run() {
  SimulationTrace trace;
  trace.motes = motes_.size();
  trace.engine = scenario_.engine;

  for (int interval = 0; interval < scenario_.intervals; ++interval) {
    IntervalRecord rec;
    rec.index = interval;
    rec.theta_s = theta_;
    received_.assign(motes_.size(), {});
    seen_ids_.assign(motes_.size(), {});
    monitored_.assign(motes_.size(), false);
    in_sync_.assign(motes_.size(), false);
    selected_.assign(motes_.size(), std::nullopt);
    for (auto& mote : motes_) mote.served.clear();

    monitor(interval);
    announce_and_elect(interval, rec);
    serve(interval, rec);
    select_and_route(rec);

    for (auto& mote : motes_) {
      const double before = mote.energy_j;
      credit_harvest(mote, theta_);
      rec.harvested_j += mote.energy_j - before;
      if (mote.alive) mote.rwp.advance(rwp::Phase::Monitoring);
    }
    record(rec);

    theta_ = rec.theta_next_s;
    for (auto& mote : motes_) {
      if (mote.alive) mote.rwp.set_theta(theta_);
    }
    trace.intervals.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace

SimulationTrace run(const Scenario& scenario) {
  scenario.validate();
  return Simulation(scenario).run();
}

}  // namespace safetrust::sim
