#include "safetrust/qad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace safetrust::qad {

Assessment Assessment::of(int value) {
  if (value < kMin || value > kMax) {
    throw std::out_of_range("assessment " + std::to_string(value) + " outside [-2, 2]");
  }
  return Assessment{static_cast<std::int8_t>(value)};
}

int Assessment::value() const {
  if (!defined()) throw std::logic_error("value() on undefined assessment");
  return value_;
}

std::string Assessment::to_string() const {
  return defined() ? std::to_string(value_) : std::string{"-"};
}

AssessmentMatrix::AssessmentMatrix(std::size_t n, Assessment fill) : n_(n), cells_(n * n, fill) {
  if (n == 0) throw std::invalid_argument("assessment matrix needs at least one agent");
}

Assessment AssessmentMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("assessment matrix index out of range");
  return cells_[i * n_ + j];
}

void AssessmentMatrix::set(std::size_t i, std::size_t j, Assessment a) {
  if (i >= n_ || j >= n_) throw std::out_of_range("assessment matrix index out of range");
  cells_[i * n_ + j] = a;
}

std::span<const Assessment> AssessmentMatrix::row(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("assessment matrix row out of range");
  return std::span<const Assessment>(cells_).subspan(i * n_, n_);
}

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::ModerateOptimistic: return "d";
    case Operator::ModeratePessimistic: return "g";
    case Operator::ConsensusSeeker: return "k";
    case Operator::AssessmentHopping: return "h";
  }
  return "?";
}

std::optional<Operator> parse_operator(std::string_view name) {
  if (name == "d") return Operator::ModerateOptimistic;
  if (name == "g") return Operator::ModeratePessimistic;
  if (name == "k") return Operator::ConsensusSeeker;
  if (name == "h") return Operator::AssessmentHopping;
  return std::nullopt;
}

std::vector<int> column_subvector(const AssessmentMatrix& matrix, std::size_t j) {
  if (j >= matrix.size()) throw std::out_of_range("column index out of range");
  std::vector<int> values;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Assessment a = matrix.at(i, j);
    if (a.defined()) values.push_back(a.value());
  }
  return values;
}

namespace {

struct ColumnStats {
  int sum = 0;
  int n1 = 0;
};

ColumnStats column_stats(const AssessmentMatrix& matrix, std::size_t j) {
  ColumnStats s;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Assessment a = matrix.at(i, j);
    if (a.defined()) {
      s.sum += a.value();
      ++s.n1;
    }
  }
  return s;
}

Assessment apply_with(Assessment current, ColumnStats column, Operator op, Rng& rng) {
  if (!current.defined()) return current;

  if (op == Operator::AssessmentHopping) {
    return Assessment::of(static_cast<int>(rng.below(5)) + Assessment::kMin);
  }
  if (column.n1 == 0) return current;

  // The column mean is compared exactly: mean <= a  <=>  sum <= a * n1.
  const int a = current.value();
  const int sum = column.sum, n1 = column.n1;
  switch (op) {
    case Operator::ModerateOptimistic:
      return sum <= a * n1 ? current : Assessment::of(a + 1);
    case Operator::ModeratePessimistic:
      return sum >= a * n1 ? current : Assessment::of(a - 1);
    case Operator::ConsensusSeeker:
      // Integer division truncates: ceiling for negative means, floor otherwise.
      return Assessment::of(sum / n1);
    case Operator::AssessmentHopping:
      break;
  }
  return current;
}

}  // namespace

Assessment apply_operator(const AssessmentMatrix& matrix, std::size_t i, std::size_t j,
                          Operator op, Rng& rng) {
  const Assessment current = matrix.at(i, j);
  if (!current.defined() || op == Operator::AssessmentHopping) return apply_with(current, {}, op, rng);
  return apply_with(current, column_stats(matrix, j), op, rng);
}

AssessmentMatrix step_society(const AssessmentMatrix& matrix, std::span<const Operator> assignment,
                              Rng& rng) {
  if (assignment.size() != matrix.size()) {
    throw std::invalid_argument("operator assignment size differs from society size");
  }
  const std::size_t n = matrix.size();
  std::vector<ColumnStats> columns(n);
  for (std::size_t j = 0; j < n; ++j) columns[j] = column_stats(matrix, j);

  AssessmentMatrix next(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      next.set(i, j, apply_with(matrix.at(i, j), columns[j], assignment[i], rng));
    }
  }
  return next;
}

int rate_of_change(const AssessmentMatrix& prev, const AssessmentMatrix& curr) {
  if (prev.size() != curr.size()) throw std::invalid_argument("rate_of_change: dimension mismatch");
  const std::size_t n = prev.size();
  std::size_t changed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) changed += prev.at(i, j) == curr.at(i, j) ? 0 : 1;
  }
  return 1 + static_cast<int>((9 * changed) / (n * n));
}

Assessment quantize_observation(double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw std::out_of_range("observation score outside [0, 1]");
  }
  // [0,.2) [.2,.4) [.4,.6) [.6,.8) [.8,1]
  const int band = std::min(4, static_cast<int>(std::floor(score * 5.0)));
  return Assessment::of(band + Assessment::kMin);
}

}  // namespace safetrust::qad
