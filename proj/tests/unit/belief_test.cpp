#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "safetrust/belief.hpp"
#include "safetrust/rng.hpp"

namespace {

using safetrust::Rng;
using namespace safetrust::prob;

Frame tf() { return Frame({"T", "F"}); }

BeliefMass example_mass() {
  const Frame f = tf();
  return BeliefMass(f, {{f.subset({"T"}), 0.6}, {f.subset({"F"}), 0.1}, {f.full(), 0.3}});
}

void expect_opinion(const Opinion& o, double b, double d, double u, double tol = 1e-12) {
  EXPECT_NEAR(o.belief, b, tol);
  EXPECT_NEAR(o.disbelief, d, tol);
  EXPECT_NEAR(o.uncertainty, u, tol);
}

BeliefMass random_mass(Rng& rng) {
  const std::size_t size = 1 + rng.below(5);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < size; ++k) names.push_back("e" + std::to_string(k));
  Frame frame(names);
  const std::uint32_t subsets = (1u << size) - 1;
  std::vector<std::pair<Subset, double>> masses;
  std::vector<bool> used(subsets + 1, false);
  const std::size_t focal = 1 + rng.below(subsets);
  double total = 0.0;
  for (std::size_t k = 0; k < focal; ++k) {
    const auto bits = static_cast<std::uint32_t>(1 + rng.below(subsets));
    if (used[bits]) continue;
    used[bits] = true;
    masses.emplace_back(Subset{bits}, rng.uniform(0.01, 1.0));
    total += masses.back().second;
  }
  for (auto& [s, m] : masses) m /= total;
  return BeliefMass(frame, masses);
}

TEST(Frame, Guards) {
  EXPECT_THROW(Frame({}), std::invalid_argument);
  EXPECT_THROW(Frame({"a", "a"}), std::invalid_argument);
  std::vector<std::string> seventeen;
  for (int k = 0; k < 17; ++k) seventeen.push_back(std::to_string(k));
  EXPECT_THROW(Frame{seventeen}, std::invalid_argument);
  seventeen.pop_back();
  EXPECT_NO_THROW(Frame{seventeen});
  EXPECT_THROW(tf().subset({"X"}), std::invalid_argument);
}

TEST(BeliefMass, Validation) {
  const Frame f = tf();
  EXPECT_THROW(BeliefMass(f, {{f.subset({"T"}), 0.5}}), std::invalid_argument);
  EXPECT_THROW(BeliefMass(f, {{Subset{}, 0.1}, {f.full(), 0.9}}), std::invalid_argument);
  EXPECT_THROW(BeliefMass(f, {{f.full(), 1.5}, {f.subset({"T"}), -0.5}}), std::invalid_argument);
  EXPECT_THROW(BeliefMass(f, {{Subset{4}, 1.0}}), std::invalid_argument);
  EXPECT_THROW(BeliefMass(f, {{f.full(), 0.5}, {f.full(), 0.5}}), std::invalid_argument);
  EXPECT_NO_THROW(BeliefMass(f, {{f.full(), 1.0 - 5e-10}}));
  EXPECT_THROW(BeliefMass(f, {{f.full(), 1.0 - 5e-9}}), std::invalid_argument);
}

TEST(Belief, Examples) {
  const Frame f = tf();
  const BeliefMass vac = BeliefMass::vacuous(f);
  EXPECT_EQ(belief(vac, f.subset({"T"})), 0.0);
  EXPECT_EQ(disbelief(vac, f.subset({"T"})), 0.0);

  const BeliefMass m = example_mass();
  EXPECT_NEAR(belief(m, f.subset({"T"})), 0.6, 1e-12);
  EXPECT_NEAR(belief(m, f.full()), 1.0, 1e-12);
  EXPECT_NEAR(disbelief(m, f.subset({"T"})), 0.1, 1e-12);
  EXPECT_EQ(disbelief(m, f.full()), 0.0);
  EXPECT_THROW(belief(m, Subset{4}), std::invalid_argument);
}

TEST(OpinionOf, Examples) {
  const Frame f = tf();
  expect_opinion(opinion_of(BeliefMass::vacuous(f), f.subset({"T"})), 0, 0, 1);
  expect_opinion(opinion_of(example_mass(), f.subset({"T"})), 0.6, 0.1, 0.3);
  expect_opinion(opinion_of(BeliefMass(f, {{f.subset({"T"}), 1.0}}), f.subset({"T"})), 1, 0, 0);
  EXPECT_THROW(opinion_of(example_mass(), Subset{}), std::invalid_argument);
}

TEST(Consensus, Examples) {
  const Opinion w = Opinion::make(0.6, 0.1, 0.3);
  const Opinion r = consensus(w, w);
  const double kappa = 0.3 + 0.3 - 0.09;
  EXPECT_NEAR(kappa, 0.51, 1e-15);
  expect_opinion(r, 2 * 0.6 * 0.3 / kappa, 2 * 0.1 * 0.3 / kappa, 0.09 / kappa);
  EXPECT_NEAR(r.belief, 0.7059, 1e-4);
  EXPECT_NEAR(r.disbelief, 0.1176, 1e-4);
  EXPECT_NEAR(r.uncertainty, 0.1765, 1e-4);
  EXPECT_NEAR(r.belief + r.disbelief + r.uncertainty, 1.0, 1e-12);

  expect_opinion(consensus(Opinion::vacuous(), Opinion::vacuous()), 0, 0, 1);
  EXPECT_THROW(consensus(Opinion::make(1, 0, 0), Opinion::make(0, 1, 0)), std::domain_error);
  EXPECT_THROW(Opinion::make(0.5, 0.5, 0.5), std::invalid_argument);
}

TEST(BeliefProperties, BoundedAndMonotone) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const BeliefMass m = random_mass(rng);
    const std::uint32_t full = m.frame().full().bits();
    for (std::uint32_t x = 1; x <= full; ++x) {
      const double b = belief(m, Subset{x}), d = disbelief(m, Subset{x});
      EXPECT_LE(b + d, 1.0 + 1e-12);
      EXPECT_GE(b, 0.0);
      EXPECT_GE(d, 0.0);

      // Direct sums over the whole power set.
      double b_ref = 0.0, d_ref = 0.0;
      for (std::uint32_t y = 1; y <= full; ++y) {
        if ((y & ~x) == 0) b_ref += m.mass(Subset{y});
        if ((y & x) == 0) d_ref += m.mass(Subset{y});
      }
      EXPECT_NEAR(b, b_ref, 1e-12);
      EXPECT_NEAR(d, d_ref, 1e-12);

      for (std::uint32_t sup = x; sup <= full; ++sup) {
        if ((x & ~sup) != 0) continue;
        EXPECT_LE(b, belief(m, Subset{sup}) + 1e-12);
        EXPECT_GE(d, disbelief(m, Subset{sup}) - 1e-12);
      }
    }
  }
}

TEST(ConsensusProperties, CommutativeWithVacuousIdentity) {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    auto draw = [&] {
      const double b = rng.uniform01(), d = rng.uniform01() * (1 - b);
      return Opinion::make(b, d, 1.0 - b - d);
    };
    const Opinion a = draw(), c = draw();
    if (a.uncertainty == 0 && c.uncertainty == 0) continue;
    const Opinion ac = consensus(a, c), ca = consensus(c, a);
    expect_opinion(ac, ca.belief, ca.disbelief, ca.uncertainty, 1e-12);
    EXPECT_NEAR(ac.belief + ac.disbelief + ac.uncertainty, 1.0, 1e-12);
    if (a.uncertainty > 0) {
      const Opinion id = consensus(a, Opinion::vacuous());
      expect_opinion(id, a.belief, a.disbelief, a.uncertainty, 1e-12);
    }
  }
}

}  // namespace
