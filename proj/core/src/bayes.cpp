#include "safetrust/bayes.hpp"

#include <stdexcept>

namespace safetrust::prob {

void EvidenceCounts::add(bool h, bool d) {
  if (h && d) ++h_and_d;
  else if (!h && d) ++not_h_and_d;
  else if (h) ++h_and_not_d;
  else ++not_h_and_not_d;
}

std::uint64_t JointEvidenceCounts::total() const {
  std::uint64_t sum = 0;
  for (auto n : cells_) sum += n;
  return sum;
}

std::uint64_t JointEvidenceCounts::hypothesis_count(bool h) const {
  return count(h, false, false) + count(h, false, true) + count(h, true, false) + count(h, true, true);
}

EvidenceCounts JointEvidenceCounts::marginal_d2() const {
  EvidenceCounts out;
  out.h_and_d = count(true, false, true) + count(true, true, true);
  out.not_h_and_d = count(false, false, true) + count(false, true, true);
  out.h_and_not_d = count(true, false, false) + count(true, true, false);
  out.not_h_and_not_d = count(false, false, false) + count(false, true, false);
  return out;
}

namespace {

double posterior(std::uint64_t h_and_evidence, std::uint64_t evidence, Smoothing smoothing) {
  if (smoothing == Smoothing::Laplace) {
    return (static_cast<double>(h_and_evidence) + 1.0) / (static_cast<double>(evidence) + 2.0);
  }
  if (evidence == 0) throw std::domain_error("posterior undefined: evidence never observed");
  return static_cast<double>(h_and_evidence) / static_cast<double>(evidence);
}

}  // namespace

double bayes_posterior(const EvidenceCounts& counts, Smoothing smoothing) {
  return posterior(counts.h_and_d, counts.d_count(), smoothing);
}

double bayes_posterior2(const JointEvidenceCounts& counts, Smoothing smoothing) {
  const std::uint64_t h_d1_d2 = counts.count(true, true, true);
  return posterior(h_d1_d2, h_d1_d2 + counts.count(false, true, true), smoothing);
}

}  // namespace safetrust::prob
