#pragma once

// Beta-distribution trust, confidence and the combined trustworthiness
// metric, plus the qualitative bands used to report them.

#include <numbers>
#include <span>
#include <string_view>

namespace safetrust::tw {

/// Degrees of normal behaviour (A) and misbehaviour (B). Both are floored
/// at 1, i.e. every record starts from the uniform Beta(1, 1) prior.
class BehaviorCounts {
 public:
  BehaviorCounts() = default;
  /// Throws std::invalid_argument when either degree is below 1.
  BehaviorCounts(double normal, double misbehavior);

  double normal() const { return normal_; }
  double misbehavior() const { return misbehavior_; }

  friend bool operator==(const BehaviorCounts&, const BehaviorCounts&) = default;

 private:
  double normal_ = 1.0;
  double misbehavior_ = 1.0;
};

/// Relative weights of trust (x) and confidence (y); smaller means heavier.
struct TrustworthinessParams {
  double x = std::numbers::sqrt2;
  double y = 3.0;
};

struct TrustRecord {
  double trust = 0.5;            // t
  double sigma = 0.0;            // standard deviation of t
  double confidence = 0.0;       // c
  double trustworthiness = 0.0;  // T
};

enum class Outcome { Normal, Misbehavior };

enum class ConfidenceBand { None, Low, Good, High };
enum class TrustworthinessBand { NotTrustworthy, Low, Good, High };

std::string_view to_string(ConfidenceBand band);
std::string_view to_string(TrustworthinessBand band);

/// Beta mean A / (A + B).
double trust_value(const BehaviorCounts& counts);

/// sqrt(AB / ((A + B)^2 (A + B + 1))).
double trust_stddev(const BehaviorCounts& counts);

/// 1 - sqrt(12 AB / ((A + B)^2 (A + B + 1))), i.e. one minus the Beta
/// standard deviation relative to that of the uniform prior.
double confidence(const BehaviorCounts& counts);

/// T = 1 - sqrt((t-1)^2/x^2 + (c-1)^2/y^2) / sqrt(1/x^2 + 1/y^2).
/// t and c must lie in [0, 1]; throws std::out_of_range otherwise.
double trustworthiness(double t, double c, const TrustworthinessParams& params = {});

/// Half-open bands [0,.2) [.2,.5) [.5,.8) [.8,1]. Throws outside [0, 1].
ConfidenceBand classify_confidence(double c);
TrustworthinessBand classify_trustworthiness(double t);

BehaviorCounts update_counts(const BehaviorCounts& counts, Outcome outcome);

TrustRecord evaluate(const BehaviorCounts& counts, const TrustworthinessParams& params = {});

/// Unweighted mean of the records' T values. Throws on an empty sequence.
double system_trustworthiness(std::span<const TrustRecord> records);

}  // namespace safetrust::tw
