#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "safetrust/trustworthiness.hpp"

namespace {

using namespace safetrust::tw;

// Independent restatement with explicit x = sqrt(2), y = 3.
double t_oracle(double t, double c) {
  const double x2 = 2.0, y2 = 9.0;
  return 1.0 - std::sqrt((t - 1) * (t - 1) / x2 + (c - 1) * (c - 1) / y2) / std::sqrt(1.0 / x2 + 1.0 / y2);
}

TEST(TrustValue, Examples) {
  EXPECT_EQ(trust_value(BehaviorCounts(1, 1)), 0.5);
  EXPECT_DOUBLE_EQ(trust_value(BehaviorCounts(9, 1)), 0.9);
  EXPECT_DOUBLE_EQ(trust_value(BehaviorCounts(1, 9)), 0.1);
  EXPECT_THROW(BehaviorCounts(0.5, 1), std::invalid_argument);
  EXPECT_THROW(BehaviorCounts(1, 0), std::invalid_argument);
}

TEST(TrustStddev, Examples) {
  EXPECT_NEAR(trust_stddev(BehaviorCounts(1, 1)), std::sqrt(1.0 / 12.0), 1e-15);
  EXPECT_NEAR(trust_stddev(BehaviorCounts(1, 1)), 0.288675, 1e-6);
  EXPECT_NEAR(trust_stddev(BehaviorCounts(9, 1)), 0.090453, 1e-6);
  EXPECT_NEAR(trust_stddev(BehaviorCounts(500, 500)), 0.0158, 1e-4);
}

TEST(Confidence, Examples) {
  EXPECT_EQ(confidence(BehaviorCounts(1, 1)), 0.0);
  EXPECT_NEAR(confidence(BehaviorCounts(9, 1)), 1.0 - std::sqrt(108.0 / 1100.0), 1e-15);
  EXPECT_NEAR(confidence(BehaviorCounts(9, 1)), 0.68665, 5e-5);
  // 1 - sqrt(12 * 2500 / (10000 * 101)) = 0.827655
  EXPECT_NEAR(confidence(BehaviorCounts(50, 50)), 1.0 - std::sqrt(30000.0 / 1010000.0), 1e-15);
  EXPECT_NEAR(confidence(BehaviorCounts(50, 50)), 0.827655, 1e-6);
}

TEST(Trustworthiness, Examples) {
  EXPECT_EQ(trustworthiness(1, 1), 1.0);
  EXPECT_EQ(trustworthiness(0, 0), 0.0);
  EXPECT_NEAR(trustworthiness(1, 0), 1.0 - (1.0 / 3.0) / std::sqrt(11.0 / 18.0), 1e-15);
  EXPECT_NEAR(trustworthiness(0, 1), 1.0 - std::numbers::sqrt2 / 2.0 / std::sqrt(11.0 / 18.0), 1e-15);
  EXPECT_NEAR(trustworthiness(1, 0), 0.57357, 1e-4);
  EXPECT_NEAR(trustworthiness(0, 1), 0.09539, 1e-4);
  EXPECT_NEAR(trustworthiness(0.9, 0.5), 0.76840, 1e-5);
  EXPECT_THROW(trustworthiness(1.1, 0.5), std::out_of_range);
  EXPECT_THROW(trustworthiness(0.5, -0.1), std::out_of_range);
  EXPECT_THROW(trustworthiness(0.5, 0.5, {0.0, 3.0}), std::invalid_argument);
}

TEST(Bands, Examples) {
  EXPECT_EQ(classify_confidence(0.0), ConfidenceBand::None);
  EXPECT_EQ(classify_confidence(0.5), ConfidenceBand::Good);
  EXPECT_EQ(classify_confidence(1.0), ConfidenceBand::High);
  EXPECT_EQ(classify_trustworthiness(0.19), TrustworthinessBand::NotTrustworthy);
  EXPECT_EQ(classify_trustworthiness(0.5), TrustworthinessBand::Good);
  EXPECT_EQ(classify_trustworthiness(0.8), TrustworthinessBand::High);
  EXPECT_EQ(classify_confidence(0.2), ConfidenceBand::Low);
  EXPECT_EQ(classify_trustworthiness(0.7999), TrustworthinessBand::Good);
  EXPECT_THROW(classify_confidence(1.0001), std::out_of_range);
  EXPECT_THROW(classify_trustworthiness(-0.0001), std::out_of_range);
}

TEST(Bands, TotalAndExclusive) {
  const std::array<double, 5> edges{0.0, 0.2, 0.5, 0.8, 1.0};
  for (int k = 0; k <= 10'000; ++k) {
    const double v = k / 10'000.0;
    int band = 0;
    while (band < 3 && v >= edges[band + 1]) ++band;
    EXPECT_EQ(static_cast<int>(classify_confidence(v)), band) << v;
    EXPECT_EQ(static_cast<int>(classify_trustworthiness(v)), band) << v;
  }
  EXPECT_EQ(to_string(ConfidenceBand::None), "none");
  EXPECT_EQ(to_string(TrustworthinessBand::NotTrustworthy), "not trustworthy");
}

TEST(UpdateCounts, Examples) {
  EXPECT_EQ(update_counts(BehaviorCounts(1, 1), Outcome::Normal), BehaviorCounts(2, 1));
  EXPECT_EQ(update_counts(BehaviorCounts(2, 1), Outcome::Misbehavior), BehaviorCounts(2, 2));
  BehaviorCounts c;
  for (int k = 0; k < 10; ++k) c = update_counts(c, Outcome::Normal);
  EXPECT_EQ(c, BehaviorCounts(11, 1));
  EXPECT_DOUBLE_EQ(trust_value(c), 11.0 / 12.0);
}

TEST(SystemTrustworthiness, Examples) {
  const std::vector<TrustRecord> one{{0.5, 0, 0, 0.7}};
  EXPECT_DOUBLE_EQ(system_trustworthiness(one), 0.7);
  const std::vector<TrustRecord> ones(4, TrustRecord{1, 0, 1, 1});
  EXPECT_DOUBLE_EQ(system_trustworthiness(ones), 1.0);
  const std::vector<TrustRecord> pair{{0, 0, 0, 0.2}, {0, 0, 0, 0.8}};
  EXPECT_DOUBLE_EQ(system_trustworthiness(pair), 0.5);
  EXPECT_THROW(system_trustworthiness({}), std::invalid_argument);
}

TEST(Evaluate, ConsistentRecord) {
  const TrustRecord r = evaluate(BehaviorCounts(9, 1));
  EXPECT_DOUBLE_EQ(r.trust, 0.9);
  EXPECT_DOUBLE_EQ(r.sigma, trust_stddev(BehaviorCounts(9, 1)));
  EXPECT_DOUBLE_EQ(r.confidence, confidence(BehaviorCounts(9, 1)));
  EXPECT_NEAR(r.trustworthiness, t_oracle(r.trust, r.confidence), 1e-12);
}

TEST(TrustworthinessProperties, SigmaMatchesNumericIntegration) {
  const std::array<double, 5> degrees{1, 2, 5, 10, 50};
  for (double a : degrees) {
    for (double b : degrees) {
      const double numeric = safetrust::testing::beta_stddev_numeric(a, b);
      EXPECT_NEAR(trust_stddev(BehaviorCounts(a, b)), numeric, 1e-6) << "A=" << a << " B=" << b;
    }
  }
}

TEST(TrustworthinessProperties, TrustAndConfidenceSymmetry) {
  for (double a = 1; a <= 40; a += 1.5) {
    for (double b = 1; b <= 40; b += 1.5) {
      EXPECT_LT(trust_value(BehaviorCounts(a, b)), trust_value(BehaviorCounts(a + 1, b)));
      EXPECT_GT(trust_value(BehaviorCounts(a, b)), trust_value(BehaviorCounts(a, b + 1)));
      EXPECT_NEAR(confidence(BehaviorCounts(a, b)), confidence(BehaviorCounts(b, a)), 1e-15);
      EXPECT_NEAR(trust_value(BehaviorCounts(a, b)), 1.0 - trust_value(BehaviorCounts(b, a)), 1e-15);
      const double c = confidence(BehaviorCounts(a, b));
      EXPECT_GE(c, 0.0);
      EXPECT_LT(c, 1.0);
    }
  }
}

TEST(TrustworthinessProperties, MonotoneOnGrid) {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double t = i * 0.05, c = j * 0.05;
      const double here = trustworthiness(t, c);
      EXPECT_NEAR(here, t_oracle(t, c), 1e-12);
      if (i < 20) EXPECT_LE(here, trustworthiness((i + 1) * 0.05, c));
      if (j < 20) EXPECT_LE(here, trustworthiness(t, (j + 1) * 0.05));
    }
  }
}

TEST(TrustworthinessProperties, TrustOutweighsConfidence) {
  constexpr double h = 1e-6;
  auto dt = [&](double t, double c) { return (trustworthiness(t + h, c) - trustworthiness(t - h, c)) / (2 * h); };
  auto dc = [&](double t, double c) { return (trustworthiness(t, c + h) - trustworthiness(t, c - h)) / (2 * h); };
  for (int i = 1; i < 100; ++i) {
    for (int j = 1; j < 100; ++j) {
      const double t = i / 100.0, c = j / 100.0;
      // Analytic gradient ratio: dT/dt : dT/dc = (1 - t) / x^2 : (1 - c) / y^2.
      const double margin = (1 - t) / 2.0 - (1 - c) / 9.0;
      if (std::abs(margin) < 1e-6) continue;
      const bool dominant = margin > 0;
      EXPECT_EQ(dt(t, c) > dc(t, c), dominant) << t << "," << c;
    }
    // Equal shortfalls: trust always pulls harder.
    const double v = i / 100.0;
    EXPECT_GT(dt(v, v), dc(v, v));
  }
  // The dominance is not global: close to full trust with little confidence
  // the confidence term has the steeper slope.
  EXPECT_LT(dt(0.95, 0.05), dc(0.95, 0.05));
  // Swapping a deficit from c onto t always costs more.
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j < i; ++j) EXPECT_GT(trustworthiness(i * 0.05, j * 0.05), trustworthiness(j * 0.05, i * 0.05));
  }
}

}  // namespace
