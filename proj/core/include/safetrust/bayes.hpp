#pragma once

// Naive Bayesian trust from evidence counts.

#include <array>
#include <cstdint>

namespace safetrust::prob {

enum class Smoothing {
  None,
  Laplace,  // add one pseudo-observation to each value of H
};

/// Joint counts over the hypothesis H and one evidence variable D.
struct EvidenceCounts {
  std::uint64_t h_and_d = 0;
  std::uint64_t not_h_and_d = 0;
  std::uint64_t h_and_not_d = 0;
  std::uint64_t not_h_and_not_d = 0;

  void add(bool h, bool d);
  std::uint64_t d_count() const { return h_and_d + not_h_and_d; }
};

/// Joint counts over H and two evidence variables D1, D2.
class JointEvidenceCounts {
 public:
  std::uint64_t count(bool h, bool d1, bool d2) const { return cells_[index(h, d1, d2)]; }
  void set(bool h, bool d1, bool d2, std::uint64_t n) { cells_[index(h, d1, d2)] = n; }
  void add(bool h, bool d1, bool d2) { ++cells_[index(h, d1, d2)]; }

  std::uint64_t total() const;
  /// Observations with the given H value, summed over D1 and D2.
  std::uint64_t hypothesis_count(bool h) const;
  /// Counts over (H, D2) with D1 summed out.
  EvidenceCounts marginal_d2() const;

 private:
  static constexpr int index(bool h, bool d1, bool d2) { return (h ? 4 : 0) | (d1 ? 2 : 0) | (d2 ? 1 : 0); }

  std::array<std::uint64_t, 8> cells_{};
};

/// p(H | D) = n(H, D) / n(D), estimated from counts. Throws
/// std::domain_error when D was never observed and smoothing is off.
double bayes_posterior(const EvidenceCounts& counts, Smoothing smoothing = Smoothing::Laplace);

/// p(H | D1, D2) = n(H, D1, D2) / n(D1, D2), with D1 and D2 both observed.
double bayes_posterior2(const JointEvidenceCounts& counts, Smoothing smoothing = Smoothing::Laplace);

}  // namespace safetrust::prob
