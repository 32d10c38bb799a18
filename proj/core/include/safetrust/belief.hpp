#pragma once

// Dempster-Shafer belief mass over a finite frame and the subjective-logic
// opinion (belief, disbelief, uncertainty) derived from it.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace safetrust::prob {

/// Subsets are enumerated exhaustively, so frames stay small.
inline constexpr std::size_t kMaxFrameSize = 16;

/// A subset of a frame, one bit per frame element.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }

  /// True when `other` is a subset of this one.
  constexpr bool includes(Subset other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// The frame of discernment: distinct atomic outcomes.
class Frame {
 public:
  explicit Frame(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }

  Subset full() const { return Subset{(std::uint32_t{1} << size()) - 1}; }
  bool contains(Subset s) const { return full().includes(s); }

  /// Throws std::invalid_argument for names not in the frame.
  Subset subset(std::initializer_list<std::string_view> names) const;
  Subset subset(std::span<const std::string> names) const;

 private:
  std::size_t index_of(std::string_view name) const;

  std::vector<std::string> elements_;
};

/// m : 2^frame -> [0, 1] with m(empty) = 0 and total mass 1.
class BeliefMass {
 public:
  static constexpr double kTolerance = 1e-9;

  /// Rejects masses outside [0, 1], mass on the empty set, subsets outside
  /// the frame, repeated subsets, and totals further than kTolerance from 1.
  BeliefMass(Frame frame, std::span<const std::pair<Subset, double>> masses);
  BeliefMass(Frame frame, std::initializer_list<std::pair<Subset, double>> masses)
      : BeliefMass(std::move(frame), std::span<const std::pair<Subset, double>>(masses.begin(), masses.size())) {}

  /// All mass on the whole frame.
  static BeliefMass vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  double mass(Subset s) const;

 private:
  Frame frame_;
  std::vector<double> mass_;  // indexed by Subset::bits()
};

struct Opinion {
  double belief = 0.0;
  double disbelief = 0.0;
  double uncertainty = 1.0;

  static constexpr double kTolerance = 1e-9;

  /// Checked construction: components in [0, 1] summing to 1.
  static Opinion make(double belief, double disbelief, double uncertainty);
  static constexpr Opinion vacuous() { return {0.0, 0.0, 1.0}; }
};

/// Sum of m(Y) over Y included in X.
double belief(const BeliefMass& mass, Subset x);

/// Sum of m(Y) over Y disjoint from X.
double disbelief(const BeliefMass& mass, Subset x);

/// (b(X), d(X), 1 - b(X) - d(X)). X must be nonempty.
Opinion opinion_of(const BeliefMass& mass, Subset x);

/// Subjective-logic consensus of two independent opinions. Throws
/// std::domain_error when both are dogmatic (u1 = u2 = 0).
Opinion consensus(const Opinion& a, const Opinion& b);

}  // namespace safetrust::prob
