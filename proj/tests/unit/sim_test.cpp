#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "safetrust/sim/mote.hpp"
#include "safetrust/sim/observation.hpp"
#include "safetrust/sim/scenario.hpp"
#include "safetrust/sim/topology.hpp"

namespace {

using safetrust::Rng;
using namespace safetrust::sim;
namespace qad = safetrust::qad;

MoteState mote(Engine engine, std::vector<Address> nbrs = {1, 2, 4, 7}) {
  return MoteState(0, std::move(nbrs), engine, 10.0, 5.0, 0.0, 60.0);
}

SafetyObservation with_score(double lq) { return {lq, 0.0, 100.0, 0.0}; }

AnalysisConfig lq_only() {
  AnalysisConfig cfg;
  cfg.weights = {1.0, 0.0, 0.0, 0.0};
  return cfg;
}

TEST(Topology, Ring) {
  const Topology t = Topology::ring(5);
  EXPECT_EQ(std::vector<Address>(t.neighbors(0).begin(), t.neighbors(0).end()), (std::vector<Address>{1, 4}));
  EXPECT_EQ(t.edge_count(), 5u);
  EXPECT_EQ(Topology::ring(1).edge_count(), 0u);
  EXPECT_EQ(Topology::ring(2).edge_count(), 1u);
  EXPECT_TRUE(t.adjacent(4, 0));
  EXPECT_FALSE(t.adjacent(0, 2));
}

TEST(Topology, Grid) {
  const Topology t = Topology::grid(20);  // 5 columns, 4 rows
  EXPECT_EQ(t.edge_count(), 4u * 4u + 5u * 3u);
  EXPECT_EQ(std::vector<Address>(t.neighbors(6).begin(), t.neighbors(6).end()), (std::vector<Address>{1, 5, 7, 11}));
  const Topology ragged = Topology::grid(7);  // 3 columns, last row holds one mote
  EXPECT_EQ(std::vector<Address>(ragged.neighbors(6).begin(), ragged.neighbors(6).end()), (std::vector<Address>{3}));
}

TEST(Topology, ShortestPathRespectsUsable) {
  const Topology t = Topology::ring(6);
  const auto all = [](Address) { return true; };
  EXPECT_EQ(t.shortest_path(0, 3, all), (std::vector<Address>{0, 1, 2, 3}));
  const auto no_one = [](Address a) { return a != 1; };
  EXPECT_EQ(t.shortest_path(0, 3, no_one), (std::vector<Address>{0, 5, 4, 3}));
  const auto cut = [](Address a) { return a != 1 && a != 4; };
  EXPECT_FALSE(t.shortest_path(0, 3, cut).has_value());
  EXPECT_EQ(t.shortest_path(2, 2, all), (std::vector<Address>{2}));
}

TEST(Topology, RandomGeometricIsSymmetricAndSeeded) {
  Rng a(9), b(9);
  const Topology t = Topology::random_geometric(30, 0.3, a);
  const Topology u = Topology::random_geometric(30, 0.3, b);
  for (Address i = 0; i < 30; ++i) {
    EXPECT_TRUE(std::equal(t.neighbors(i).begin(), t.neighbors(i).end(), u.neighbors(i).begin(), u.neighbors(i).end()));
    for (Address j : t.neighbors(i)) EXPECT_TRUE(t.adjacent(j, i));
  }
}

TEST(ObserveLink, Examples) {
  LinkTruth exact{{0.8, 1000, 50, 0.9}, 0.0, {}};
  Rng rng(1);
  EXPECT_EQ(observe_link(exact, 0, rng), exact.truth);

  LinkTruth top{{1.0, 1000, 50, 1.0}, 0.3, {}};
  for (int k = 0; k < 200; ++k) {
    const SafetyObservation o = observe_link(top, 0, rng);
    EXPECT_LE(o.link_quality, 1.0);
    EXPECT_LE(o.uptime, 1.0);
    EXPECT_TRUE(o.valid());
    EXPECT_NEAR(o.tx_rate_bps, 1000, 300 + 1e-9);
  }

  Rng r1(77), r2(77);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(observe_link(top, k, r1), observe_link(top, k, r2));
}

TEST(ObserveLink, FollowsSchedule) {
  LinkTruth link{{0.9, 1, 1, 1}, 0.0, {{5, {0.2, 1, 1, 1}}, {9, {0.5, 1, 1, 1}}}};
  Rng rng(1);
  EXPECT_DOUBLE_EQ(observe_link(link, 4, rng).link_quality, 0.9);
  EXPECT_DOUBLE_EQ(observe_link(link, 5, rng).link_quality, 0.2);
  EXPECT_DOUBLE_EQ(observe_link(link, 8, rng).link_quality, 0.2);
  EXPECT_DOUBLE_EQ(observe_link(link, 30, rng).link_quality, 0.5);
}

TEST(SafetyScore, Examples) {
  const ScoreReference ref;
  const ScoreWeights equal{0.25, 0.25, 0.25, 0.25};
  EXPECT_DOUBLE_EQ(safety_score({1.0, ref.tx_rate_bps, 0.0, 1.0}, equal, ref), 1.0);
  EXPECT_DOUBLE_EQ(safety_score({0.0, 0.0, ref.response_time_ms, 0.0}, equal, ref), 0.0);
  EXPECT_DOUBLE_EQ(safety_score(silent_observation(ref), equal, ref), 0.0);
  EXPECT_NEAR(safety_score({0.8, 0.5 * ref.tx_rate_bps, 0.5 * ref.response_time_ms, 0.9}, equal, ref), 0.675, 1e-12);
  EXPECT_DOUBLE_EQ(safety_score({1.0, 10 * ref.tx_rate_bps, 0.0, 1.0}, equal, ref), 1.0);
}

TEST(Analyze, QadQuantizesScore) {
  MoteState m = mote(Engine::Qad);
  analyze(m, 4, with_score(0.95), lq_only());
  EXPECT_EQ(m.assessments.at(4), qad::Assessment::of(2));
  EXPECT_DOUBLE_EQ(trust_metric(m, 4, lq_only()), 2.0);
  EXPECT_FALSE(trust_record(m, 4, lq_only()).has_value());
  EXPECT_DOUBLE_EQ(trust_metric(m, 7, lq_only()), -3.0);  // never assessed
  m.served[4] = qad::Assessment::of(-1);
  EXPECT_DOUBLE_EQ(trust_metric(m, 4, lq_only()), -1.0);
  EXPECT_THROW(analyze(m, 3, with_score(0.5), lq_only()), std::invalid_argument);
}

TEST(Analyze, BetaCountsOutcomes) {
  MoteState m = mote(Engine::Beta);
  analyze(m, 1, with_score(0.3), lq_only());
  EXPECT_EQ(m.counts_by_peer.at(1), safetrust::tw::BehaviorCounts(1, 2));
  analyze(m, 1, with_score(0.5), lq_only());  // the threshold itself is normal
  EXPECT_EQ(m.counts_by_peer.at(1), safetrust::tw::BehaviorCounts(2, 2));
  const auto rec = trust_record(m, 1, lq_only());
  ASSERT_TRUE(rec.has_value());
  EXPECT_DOUBLE_EQ(rec->trust, 0.5);
  EXPECT_DOUBLE_EQ(trust_metric(m, 1, lq_only()), rec->trustworthiness);
  // Assessments are kept for the neighbourhood matrix under every engine.
  EXPECT_EQ(m.assessments.at(1), qad::Assessment::of(0));
}

TEST(Analyze, BayesStartsUninformed) {
  MoteState m = mote(Engine::Bayes);
  EXPECT_DOUBLE_EQ(trust_metric(m, 2, lq_only()), 0.5);
  AnalysisConfig cfg;
  // Good score, rate above reference, uptime above one half.
  analyze(m, 2, {0.9, 2 * cfg.reference.tx_rate_bps, 10, 0.9}, cfg);
  EXPECT_EQ(m.evidence_by_peer.at(2).count(true, true, true), 1u);
  EXPECT_DOUBLE_EQ(trust_metric(m, 2, cfg), 2.0 / 3.0);
  analyze(m, 2, {0.0, 2 * cfg.reference.tx_rate_bps, 90, 0.6}, cfg);
  EXPECT_EQ(m.evidence_by_peer.at(2).count(false, true, true), 1u);
  EXPECT_DOUBLE_EQ(trust_metric(m, 2, cfg), 0.5);
  const auto rec = trust_record(m, 2, cfg);
  ASSERT_TRUE(rec.has_value());
  EXPECT_DOUBLE_EQ(rec->trust, 0.5);
}

TEST(SelectPeer, Examples) {
  MoteState m = mote(Engine::Beta);
  const AnalysisConfig cfg = lq_only();
  for (int k = 0; k < 8; ++k) analyze(m, 1, with_score(0.9), cfg);
  for (int k = 0; k < 8; ++k) analyze(m, 2, with_score(0.1), cfg);
  const std::vector<Address> both{2, 1};
  EXPECT_EQ(select_peer(m, both, cfg), 1u);

  const std::vector<Address> tie{7, 4};
  EXPECT_EQ(select_peer(m, tie, cfg), 4u);
  const std::vector<Address> sole{2};
  EXPECT_EQ(select_peer(m, sole, cfg), 2u);
  EXPECT_THROW(select_peer(m, std::vector<Address>{}, cfg), std::invalid_argument);
  EXPECT_THROW(select_peer(m, std::vector<Address>{3}, cfg), std::invalid_argument);
  const std::vector<Address> with_self{0, 2};
  EXPECT_EQ(select_peer(m, with_self, cfg), 2u);
}

TEST(ChargeEnergy, Examples) {
  const EnergyCosts costs{1.0, 0.5, 1.0};
  MoteState m = mote(Engine::Qad);
  charge_energy(m, Action::Transmit, costs);
  EXPECT_DOUBLE_EQ(m.energy_j, 4.0);
  m.energy_j = 0.5;
  charge_energy(m, Action::Compute, costs);
  EXPECT_EQ(m.energy_j, 0.0);
  EXPECT_FALSE(m.alive);
  charge_energy(m, Action::Receive, costs);
  EXPECT_EQ(m.energy_j, 0.0);
  credit_harvest(m, 100);
  EXPECT_EQ(m.energy_j, 0.0);

  MoteState sink = mote(Engine::Qad);
  sink.unconstrained = true;
  charge_energy(sink, Action::Transmit, {100, 100, 100});
  EXPECT_TRUE(sink.alive);
  EXPECT_DOUBLE_EQ(sink.energy_j, 5.0);
}

TEST(ChargeEnergy, StaysWithinCapacity) {
  Rng rng(13);
  MoteState m(0, {1}, Engine::Qad, 10.0, 10.0, 0.02, 60.0);
  const EnergyCosts costs{0.3, 0.2, 0.4};
  for (int k = 0; k < 2000 && m.alive; ++k) {
    const double before = m.energy_j;
    if (rng.below(4) == 0) {
      const double seconds = rng.uniform(0, 30);
      credit_harvest(m, seconds);
      EXPECT_LE(m.energy_j - before, m.harvest_j_per_s * seconds + 1e-12);
    } else {
      charge_energy(m, static_cast<Action>(rng.below(3)), costs);
      EXPECT_LE(m.energy_j, before);
    }
    EXPECT_GE(m.energy_j, 0.0);
    EXPECT_LE(m.energy_j, m.capacity_j);
  }
}

TEST(Scenario, DefaultsValidate) { EXPECT_NO_THROW(Scenario{}.validate()); }

TEST(Scenario, NamesOffendingKey) {
  auto key_of = [](const Scenario& s) -> std::string {
    try {
      s.validate();
    } catch (const InvalidScenario& e) {
      return e.key();
    }
    return "";
  };
  Scenario s;
  s.motes = 0;
  EXPECT_EQ(key_of(s), "network.motes");
  s = Scenario{};
  s.analysis.weights = {0.3, 0.2, 0.2, 0.2};
  EXPECT_EQ(key_of(s), "trust.weights");
  s = Scenario{};
  s.theta_min_s = 100;
  EXPECT_EQ(key_of(s), "rwp.theta_base_s");
  s = Scenario{};
  s.kill_events.push_back({2, Address{50}});
  EXPECT_EQ(key_of(s), "events.kill");
  s = Scenario{};
  s.architecture = Architecture::Sink;
  s.kill_events.push_back({2, std::nullopt});
  EXPECT_EQ(key_of(s), "events.kill");
  s = Scenario{};
  s.truth_events.push_back({1, LinkPair{0, 50}, TruthPatch{.link_quality = 0.1}});
  EXPECT_EQ(key_of(s), "events.link");
}

}  // namespace
