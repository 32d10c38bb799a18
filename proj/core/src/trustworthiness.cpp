#include "safetrust/trustworthiness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace safetrust::tw {

BehaviorCounts::BehaviorCounts(double normal, double misbehavior)
    : normal_(normal), misbehavior_(misbehavior) {
  if (!(normal >= 1.0) || !(misbehavior >= 1.0)) {
    throw std::invalid_argument("behaviour degrees must be >= 1");
  }
}

std::string_view to_string(ConfidenceBand band) {
  switch (band) {
    case ConfidenceBand::None: return "none";
    case ConfidenceBand::Low: return "low";
    case ConfidenceBand::Good: return "good";
    case ConfidenceBand::High: return "high";
  }
  return "?";
}

std::string_view to_string(TrustworthinessBand band) {
  switch (band) {
    case TrustworthinessBand::NotTrustworthy: return "not trustworthy";
    case TrustworthinessBand::Low: return "low";
    case TrustworthinessBand::Good: return "good";
    case TrustworthinessBand::High: return "high";
  }
  return "?";
}

namespace {

// AB / ((A+B)^2 (A+B+1)), the Beta variance.
double beta_variance(const BehaviorCounts& counts) {
  const double a = counts.normal();
  const double b = counts.misbehavior();
  const double s = a + b;
  return a * b / (s * s * (s + 1.0));
}

int band_index(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::out_of_range("band value outside [0, 1]");
  if (v < 0.2) return 0;
  if (v < 0.5) return 1;
  if (v < 0.8) return 2;
  return 3;
}

}  // namespace

double trust_value(const BehaviorCounts& counts) {
  return counts.normal() / (counts.normal() + counts.misbehavior());
}

double trust_stddev(const BehaviorCounts& counts) { return std::sqrt(beta_variance(counts)); }

double confidence(const BehaviorCounts& counts) {
  // With A, B >= 1 the radicand is at most 1.
  return std::clamp(1.0 - std::sqrt(12.0 * beta_variance(counts)), 0.0, 1.0);
}

double trustworthiness(double t, double c, const TrustworthinessParams& params) {
  if (!(t >= 0.0 && t <= 1.0) || !(c >= 0.0 && c <= 1.0)) {
    throw std::out_of_range("trust and confidence must lie in [0, 1]");
  }
  if (!(params.x > 0.0) || !(params.y > 0.0)) throw std::invalid_argument("x and y must be positive");
  const double wx = 1.0 / (params.x * params.x);
  const double wy = 1.0 / (params.y * params.y);
  const double distance = std::sqrt((t - 1.0) * (t - 1.0) * wx + (c - 1.0) * (c - 1.0) * wy);
  return std::clamp(1.0 - distance / std::sqrt(wx + wy), 0.0, 1.0);
}

ConfidenceBand classify_confidence(double c) { return static_cast<ConfidenceBand>(band_index(c)); }

TrustworthinessBand classify_trustworthiness(double t) {
  return static_cast<TrustworthinessBand>(band_index(t));
}

BehaviorCounts update_counts(const BehaviorCounts& counts, Outcome outcome) {
  if (outcome == Outcome::Normal) return {counts.normal() + 1.0, counts.misbehavior()};
  return {counts.normal(), counts.misbehavior() + 1.0};
}

TrustRecord evaluate(const BehaviorCounts& counts, const TrustworthinessParams& params) {
  TrustRecord r;
  r.trust = trust_value(counts);
  r.sigma = trust_stddev(counts);
  r.confidence = confidence(counts);
  r.trustworthiness = trustworthiness(r.trust, r.confidence, params);
  return r;
}

double system_trustworthiness(std::span<const TrustRecord> records) {
  if (records.empty()) throw std::invalid_argument("system trustworthiness of no records");
  double sum = 0.0;
  for (const auto& r : records) sum += r.trustworthiness;
  return sum / static_cast<double>(records.size());
}

}  // namespace safetrust::tw
