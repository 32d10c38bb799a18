#include "safetrust/rwp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace safetrust::rwp {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Monitoring: return "monitoring";
    case Phase::Announcing: return "announcing";
    case Phase::Electing: return "electing";
    case Phase::Serving: return "serving";
  }
  return "?";
}

bool is_legal_transition(Phase from, Phase to) {
  switch (from) {
    case Phase::Monitoring: return to == Phase::Announcing;
    case Phase::Announcing: return to == Phase::Electing;
    case Phase::Electing: return to == Phase::Serving;
    case Phase::Serving: return to == Phase::Monitoring;
  }
  return false;
}

NeighborhoodMatrix::NeighborhoodMatrix(std::vector<Address> members_in)
    : members(std::move(members_in)), matrix(members.size()) {
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("neighbourhood members must be sorted and distinct");
  }
}

std::optional<std::size_t> NeighborhoodMatrix::index_of(Address a) const {
  auto it = std::lower_bound(members.begin(), members.end(), a);
  if (it == members.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

RwpState::RwpState(Address addr, double theta_s) : addr_(addr), theta_s_(theta_s) {
  if (!(theta_s > 0.0)) throw std::invalid_argument("interval length must be positive");
}

void RwpState::advance(Phase next) {
  if (!is_legal_transition(phase_, next)) {
    throw std::logic_error("illegal RWP transition " + std::string(to_string(phase_)) + " -> " +
                           std::string(to_string(next)));
  }
  if (phase_ == Phase::Serving) {
    hacp_.reset();
    backup_.reset();
  }
  phase_ = next;
}

void RwpState::set_theta(double theta_s) {
  if (!(theta_s > 0.0)) throw std::invalid_argument("interval length must be positive");
  theta_s_ = theta_s;
}

void RwpState::set_pcp(int pcp) {
  if (pcp < kScaleMin || pcp > kScaleMax) throw std::out_of_range("PCP outside 1..10");
  pcp_ = pcp;
}

void RwpState::set_roc(int roc) {
  if (roc < kScaleMin || roc > kScaleMax) throw std::out_of_range("RoC outside 1..10");
  roc_ = roc;
}

void RwpState::set_hacp(Address primary, std::optional<Address> backup) {
  if (phase_ != Phase::Serving) throw std::logic_error("HACP is assigned only while serving");
  hacp_ = primary;
  backup_ = backup;
}

int compute_pcp(double residual_j, double harvest_j_per_s, double theta_s, double capacity_j) {
  if (!(capacity_j > 0.0)) throw std::invalid_argument("capacity must be positive");
  if (residual_j < 0.0 || harvest_j_per_s < 0.0 || theta_s < 0.0) {
    throw std::invalid_argument("PCP inputs must be non-negative");
  }
  const double projected = std::min(capacity_j, residual_j + harvest_j_per_s * theta_s);
  // The slack keeps exact tenths (0.3 * 10 = 3.0000000000000004) from
  // rounding up a whole step.
  const double scaled = std::ceil(10.0 * projected / capacity_j - 1e-9);
  return static_cast<int>(std::clamp(scaled, double{kScaleMin}, double{kScaleMax}));
}

namespace {

bool ranks_before(const Announcement& a, const Announcement& b) {
  if (a.pcp != b.pcp) return a.pcp > b.pcp;
  return a.addr < b.addr;
}

void check_unique(std::span<const Announcement> announcements) {
  std::set<Address> seen;
  for (const auto& a : announcements) {
    if (!seen.insert(a.addr).second) throw std::invalid_argument("duplicate announcement address");
  }
}

}  // namespace

Address elect_hacp(std::span<const Announcement> announcements) {
  return elect_with_backup(announcements).primary;
}

Election elect_with_backup(std::span<const Announcement> announcements) {
  if (announcements.empty()) throw std::invalid_argument("election over no announcements");
  check_unique(announcements);
  std::vector<Announcement> ranked(announcements.begin(), announcements.end());
  std::sort(ranked.begin(), ranked.end(), ranks_before);
  Election e{ranked[0].addr, std::nullopt};
  if (ranked.size() > 1) e.backup = ranked[1].addr;
  return e;
}

double next_interval(std::span<const int> roc_values, double theta_base_s, IntervalBounds bounds) {
  if (roc_values.empty()) throw std::invalid_argument("next_interval needs at least one RoC value");
  if (!(bounds.min_s > 0.0) || !(bounds.min_s <= theta_base_s) || !(theta_base_s <= bounds.max_s)) {
    throw std::invalid_argument("interval bounds must satisfy 0 < min <= base <= max");
  }
  double sum = 0.0;
  for (int roc : roc_values) {
    if (roc < kScaleMin || roc > kScaleMax) throw std::out_of_range("RoC outside 1..10");
    sum += roc;
  }
  const double mean = sum / static_cast<double>(roc_values.size());
  return std::clamp(theta_base_s * (11.0 - mean) / 10.0, bounds.min_s, bounds.max_s);
}

std::optional<std::size_t> MajorMatrix::index_of(Address a) const {
  auto it = std::find(society.begin(), society.end(), a);
  if (it == society.end()) return std::nullopt;
  return static_cast<std::size_t>(it - society.begin());
}

MajorMatrix aggregate_major(std::span<const MinorUpload> minors, std::span<const Address> society,
                            int interval_index, double theta_next_s, Rng& rng) {
  if (society.empty()) throw std::invalid_argument("empty society");
  if (!(theta_next_s > 0.0)) throw std::invalid_argument("next interval must be positive");

  MajorMatrix major{std::vector<Address>(society.begin(), society.end()),
                    qad::AssessmentMatrix(society.size()), interval_index, theta_next_s};
  if (std::set<Address>(society.begin(), society.end()).size() != society.size()) {
    throw std::invalid_argument("duplicate address in society");
  }

  std::vector<qad::Operator> ops(society.size(), qad::Operator::ModerateOptimistic);
  std::vector<bool> seen(society.size(), false);
  for (const auto& upload : minors) {
    const auto row = major.index_of(upload.owner);
    if (!row) throw std::invalid_argument("minor owner " + std::to_string(upload.owner) + " not in society");
    if (seen[*row]) throw std::invalid_argument("duplicate minor from " + std::to_string(upload.owner));
    seen[*row] = true;
    ops[*row] = upload.op;

    const auto own = upload.minor.index_of(upload.owner);
    if (!own) throw std::invalid_argument("minor does not include its owner");
    for (std::size_t k = 0; k < upload.minor.members.size(); ++k) {
      const auto col = major.index_of(upload.minor.members[k]);
      if (!col) throw std::invalid_argument("minor member outside the society");
      major.a_major.set(*row, *col, upload.minor.matrix.at(*own, k));
    }
  }

  major.a_major = qad::step_society(major.a_major, ops, rng);
  return major;
}

QueryResult handle_query(const MajorMatrix& major, Address subject) {
  const auto col = major.index_of(subject);
  if (!col) throw std::invalid_argument("query for unknown subject " + std::to_string(subject));
  QueryResult r;
  r.values = qad::column_subvector(major.a_major, *col);
  r.n1 = r.values.size();
  if (r.n1 > 0) {
    const double sum = std::accumulate(r.values.begin(), r.values.end(), 0.0);
    r.mean = sum / static_cast<double>(r.n1);
    r.trust_level = (*r.mean - qad::Assessment::kMin) / (qad::Assessment::kMax - qad::Assessment::kMin);
  }
  return r;
}

std::optional<Address> failover(Address primary, std::optional<Address> backup,
                                const std::function<bool(Address)>& live) {
  if (live(primary)) return primary;
  if (backup && live(*backup)) return backup;
  return std::nullopt;
}

boost::multiprecision::cpp_int trust_relation_count(int n) {
  if (n < 1 || n > kMaxSocietyForCount) throw std::out_of_range("society size must be in 1..256");
  boost::multiprecision::cpp_int nonempty_subsets = 1;
  nonempty_subsets <<= n;
  nonempty_subsets -= 1;
  return nonempty_subsets * nonempty_subsets;
}

}  // namespace safetrust::rwp
