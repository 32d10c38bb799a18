#include "safetrust/belief.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace safetrust::prob {

Frame::Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("frame must have at least one element");
  if (elements_.size() > kMaxFrameSize) throw std::invalid_argument("frame larger than 16 elements");
  auto sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("frame elements must be distinct");
  }
}

std::size_t Frame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return i;
  }
  throw std::invalid_argument("'" + std::string(name) + "' is not a frame element");
}

Subset Frame::subset(std::initializer_list<std::string_view> names) const {
  std::uint32_t bits = 0;
  for (auto name : names) bits |= std::uint32_t{1} << index_of(name);
  return Subset{bits};
}

Subset Frame::subset(std::span<const std::string> names) const {
  std::uint32_t bits = 0;
  for (const auto& name : names) bits |= std::uint32_t{1} << index_of(name);
  return Subset{bits};
}

BeliefMass::BeliefMass(Frame frame, std::span<const std::pair<Subset, double>> masses)
    : frame_(std::move(frame)), mass_(std::size_t{1} << frame_.size(), 0.0) {
  std::vector<bool> seen(mass_.size(), false);
  double total = 0.0;
  for (const auto& [subset, m] : masses) {
    if (!frame_.contains(subset)) throw std::invalid_argument("massed subset is not within the frame");
    if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("mass outside [0, 1]");
    if (subset.empty() && m != 0.0) throw std::invalid_argument("the empty set carries no mass");
    if (seen[subset.bits()]) throw std::invalid_argument("subset massed twice");
    seen[subset.bits()] = true;
    mass_[subset.bits()] = m;
    total += m;
  }
  if (std::abs(total - 1.0) > kTolerance) throw std::invalid_argument("masses do not sum to 1");
}

BeliefMass BeliefMass::vacuous(Frame frame) {
  const Subset all = frame.full();
  return BeliefMass(std::move(frame), {{all, 1.0}});
}

double BeliefMass::mass(Subset s) const {
  if (!frame_.contains(s)) throw std::invalid_argument("subset is not within the frame");
  return mass_[s.bits()];
}

namespace {

// Sum of masses over every subset of `within`, including the empty set
// (which is always zero).
double sum_submasks(const BeliefMass& mass, std::uint32_t within) {
  double sum = 0.0;
  for (std::uint32_t y = within;; y = (y - 1) & within) {
    sum += mass.mass(Subset{y});
    if (y == 0) break;
  }
  return sum;
}

}  // namespace

double belief(const BeliefMass& mass, Subset x) {
  if (!mass.frame().contains(x)) throw std::invalid_argument("belief: subset is not within the frame");
  return std::min(1.0, sum_submasks(mass, x.bits()));
}

double disbelief(const BeliefMass& mass, Subset x) {
  if (!mass.frame().contains(x)) throw std::invalid_argument("disbelief: subset is not within the frame");
  const std::uint32_t complement = mass.frame().full().bits() & ~x.bits();
  return std::min(1.0, sum_submasks(mass, complement));
}

Opinion Opinion::make(double belief, double disbelief, double uncertainty) {
  const auto in_unit = [](double v) { return v >= -kTolerance && v <= 1.0 + kTolerance; };
  if (!in_unit(belief) || !in_unit(disbelief) || !in_unit(uncertainty)) {
    throw std::invalid_argument("opinion component outside [0, 1]");
  }
  if (std::abs(belief + disbelief + uncertainty - 1.0) > kTolerance) {
    throw std::invalid_argument("opinion components do not sum to 1");
  }
  return {std::clamp(belief, 0.0, 1.0), std::clamp(disbelief, 0.0, 1.0), std::clamp(uncertainty, 0.0, 1.0)};
}

Opinion opinion_of(const BeliefMass& mass, Subset x) {
  if (x.empty()) throw std::invalid_argument("opinion_of: subset must be nonempty");
  const double b = belief(mass, x);
  const double d = disbelief(mass, x);
  return Opinion::make(b, d, std::max(0.0, 1.0 - b - d));
}

Opinion consensus(const Opinion& a, const Opinion& b) {
  const double kappa = a.uncertainty + b.uncertainty - a.uncertainty * b.uncertainty;
  if (kappa <= 0.0) throw std::domain_error("consensus of two dogmatic opinions is undefined");
  const double belief = (a.belief * b.uncertainty + b.belief * a.uncertainty) / kappa;
  const double disbelief = (a.disbelief * b.uncertainty + b.disbelief * a.uncertainty) / kappa;
  const double uncertainty = (a.uncertainty * b.uncertainty) / kappa;
  return Opinion::make(belief, disbelief, uncertainty);
}

}  // namespace safetrust::prob
