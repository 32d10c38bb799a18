#pragma once

// Reference implementations used only by the tests. Each one follows the
// textbook definition as literally as possible, independent of core/.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "safetrust/qad.hpp"
#include "safetrust/rng.hpp"

namespace safetrust::testing {

/// Trapezoid rule on [0, 1] with `points` samples.
inline double trapezoid(const std::function<double(double)>& f, int points) {
  const double h = 1.0 / (points - 1);
  double sum = 0.5 * (f(0.0) + f(1.0));
  for (int k = 1; k < points - 1; ++k) sum += f(k * h);
  return sum * h;
}

/// Beta(a, b) standard deviation by integrating the density numerically.
/// Requires a, b >= 1 so the density stays bounded at the endpoints.
inline double beta_stddev_numeric(double a, double b, int points = 100'000) {
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  auto density = [&](double x) {
    if ((x <= 0.0 && a > 1.0) || (x >= 1.0 && b > 1.0)) return 0.0;
    const double lx = x <= 0.0 ? 0.0 : (a - 1.0) * std::log(x);
    const double l1x = x >= 1.0 ? 0.0 : (b - 1.0) * std::log1p(-x);
    return std::exp(log_norm + lx + l1x);
  };
  const double mean = trapezoid([&](double x) { return x * density(x); }, points);
  const double var = trapezoid([&](double x) { return (x - mean) * (x - mean) * density(x); }, points);
  return std::sqrt(var);
}

/// Number of nonempty subsets of an n-set, by listing every bitmask.
inline std::uint64_t nonempty_subsets(int n) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask != 0) ++count;
  }
  return count;
}

inline qad::AssessmentMatrix random_matrix(std::size_t n, Rng& rng, double undefined_share = 0.2) {
  qad::AssessmentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.uniform01() >= undefined_share) m.set(i, j, qad::Assessment::of(static_cast<int>(rng.below(5)) - 2));
    }
  }
  return m;
}

inline qad::AssessmentMatrix column_matrix(std::size_t rows, const std::vector<std::optional<int>>& column,
                                           std::size_t j = 0) {
  qad::AssessmentMatrix m(rows);
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i]) m.set(i, j, qad::Assessment::of(*column[i]));
  }
  return m;
}

}  // namespace safetrust::testing
