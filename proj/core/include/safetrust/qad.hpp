#pragma once

// Qualitative Assessment Dynamics: five-valued trust assessments, the
// society assessment matrix, and the operators that evolve it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "safetrust/rng.hpp"

namespace safetrust::qad {

/// One agent's trust toward another: an integer in [-2, 2] or undefined
/// (the agent is unaware of the other, or withholds its view).
class Assessment {
 public:
  static constexpr int kMin = -2;
  static constexpr int kMax = 2;

  constexpr Assessment() = default;

  static constexpr Assessment undefined() { return Assessment{}; }
  static Assessment of(int value);

  constexpr bool defined() const { return value_ != kUndefined; }

  /// Throws std::logic_error when undefined.
  int value() const;

  /// "-" for undefined, otherwise the signed integer.
  std::string to_string() const;

  friend constexpr bool operator==(Assessment, Assessment) = default;

 private:
  static constexpr std::int8_t kUndefined = INT8_MIN;
  constexpr explicit Assessment(std::int8_t v) : value_(v) {}

  std::int8_t value_ = kUndefined;
};

/// Square n x n grid; entry (i, j) is agent i's assessment of agent j.
/// Row i is agent i's outgoing view, column j is society's view of j.
class AssessmentMatrix {
 public:
  explicit AssessmentMatrix(std::size_t n, Assessment fill = Assessment::undefined());

  std::size_t size() const { return n_; }

  Assessment at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Assessment a);

  std::span<const Assessment> row(std::size_t i) const;

  friend bool operator==(const AssessmentMatrix&, const AssessmentMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Assessment> cells_;
};

enum class Operator {
  ModerateOptimistic,   // d
  ModeratePessimistic,  // g
  ConsensusSeeker,      // k
  AssessmentHopping,    // h
};

/// Single-letter name: d, g, k or h.
std::string_view to_string(Operator op);
std::optional<Operator> parse_operator(std::string_view name);

/// Defined entries of column j in row order.
std::vector<int> column_subvector(const AssessmentMatrix& matrix, std::size_t j);

/// New value of entry (i, j) under `op`, reading the pre-operation column.
/// Undefined entries stay undefined. The rng is consumed only by the
/// hopping operator.
Assessment apply_operator(const AssessmentMatrix& matrix, std::size_t i, std::size_t j,
                          Operator op, Rng& rng);

/// Synchronous update: every entry (i, j) is recomputed from the pre-step
/// matrix with agent i's operator. Entries are visited in row-major order,
/// which fixes the rng consumption order.
AssessmentMatrix step_society(const AssessmentMatrix& matrix, std::span<const Operator> assignment,
                              Rng& rng);

/// Change between two equal-sized matrices on a 1..10 scale:
/// 1 + floor(9 * changed / total).
int rate_of_change(const AssessmentMatrix& prev, const AssessmentMatrix& curr);

/// Quintile mapping of a [0, 1] score onto [-2, 2].
Assessment quantize_observation(double score);

}  // namespace safetrust::qad
