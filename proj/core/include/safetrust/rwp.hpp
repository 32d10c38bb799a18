#pragma once

// Rolling Work-load Protocol: per-mote phase machine, computing-power
// election, interval adaptation, and the society-wide aggregation hosted
// by the elected mote.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "safetrust/qad.hpp"
#include "safetrust/rng.hpp"

namespace safetrust::rwp {

using Address = std::uint32_t;

inline constexpr int kScaleMin = 1;
inline constexpr int kScaleMax = 10;

enum class Phase { Monitoring, Announcing, Electing, Serving };

std::string_view to_string(Phase phase);

/// Monitoring -> Announcing -> Electing -> Serving -> Monitoring.
bool is_legal_transition(Phase from, Phase to);

/// A mote's view of its neighbourhood: the assessment matrix over
/// `members` (sorted addresses, the owner included).
struct NeighborhoodMatrix {
  std::vector<Address> members;
  qad::AssessmentMatrix matrix;

  NeighborhoodMatrix(std::vector<Address> members_in);
  std::optional<std::size_t> index_of(Address a) const;
};

/// Protocol state owned by one mote.
class RwpState {
 public:
  RwpState(Address addr, double theta_s);

  Address addr() const { return addr_; }
  Phase phase() const { return phase_; }
  double theta() const { return theta_s_; }
  int pcp() const { return pcp_; }
  int roc() const { return roc_; }
  const std::optional<NeighborhoodMatrix>& a_minor() const { return a_minor_; }
  std::optional<Address> hacp() const { return hacp_; }
  std::optional<Address> backup_hacp() const { return backup_; }

  /// Throws std::logic_error on an illegal transition. Leaving Serving
  /// clears the HACP assignment.
  void advance(Phase next);

  void set_theta(double theta_s);
  void set_pcp(int pcp);
  void set_roc(int roc);
  void set_minor(NeighborhoodMatrix minor) { a_minor_ = std::move(minor); }
  /// Only legal while Serving.
  void set_hacp(Address primary, std::optional<Address> backup);

 private:
  Address addr_;
  Phase phase_ = Phase::Monitoring;
  double theta_s_;
  int pcp_ = kScaleMin;
  int roc_ = kScaleMin;
  std::optional<NeighborhoodMatrix> a_minor_;
  std::optional<Address> hacp_;
  std::optional<Address> backup_;
};

struct Announcement {
  Address addr = 0;
  int pcp = kScaleMin;

  friend bool operator==(const Announcement&, const Announcement&) = default;
};

struct FloodMessage {
  Address origin = 0;
  int pcp = kScaleMin;
  std::uint64_t msg_id = 0;
  int hop_count = 0;
};

struct Election {
  Address primary = 0;
  std::optional<Address> backup;
};

struct IntervalBounds {
  double min_s = 0.0;
  double max_s = 0.0;
};

/// Forecast of next-interval computing capability on the 1..10 scale:
/// ceil(10 * min(capacity, residual + harvest * theta) / capacity), clamped.
int compute_pcp(double residual_j, double harvest_j_per_s, double theta_s, double capacity_j);

/// Highest PCP wins; ties go to the lowest address.
Address elect_hacp(std::span<const Announcement> announcements);

/// Primary plus the runner-up under the same ordering (if any).
Election elect_with_backup(std::span<const Announcement> announcements);

/// theta_base * (11 - mean(roc)) / 10, clamped to the bounds.
double next_interval(std::span<const int> roc_values, double theta_base_s, IntervalBounds bounds);

/// Society-wide matrix assembled by the HACP, with the next interval length.
struct MajorMatrix {
  std::vector<Address> society;
  qad::AssessmentMatrix a_major;
  int interval_index = 0;
  double theta_next_s = 1.0;

  std::optional<std::size_t> index_of(Address a) const;
};

struct MinorUpload {
  Address owner = 0;
  NeighborhoodMatrix minor;
  qad::Operator op = qad::Operator::ModerateOptimistic;
};

/// Row i of the major matrix is owner i's own row from its minor (undefined
/// when no minor arrived); the result is one step_society pass with each
/// owner's operator.
MajorMatrix aggregate_major(std::span<const MinorUpload> minors, std::span<const Address> society,
                            int interval_index, double theta_next_s, Rng& rng);

/// What the HACP returns for one subject.
struct QueryResult {
  std::vector<int> values;          // defined entries of the subject's column
  std::size_t n1 = 0;
  std::optional<double> mean;
  std::optional<double> trust_level;  // mean mapped from [-2, 2] onto [0, 1]
};

QueryResult handle_query(const MajorMatrix& major, Address subject);

/// The first live HACP among primary and backup, or nothing when the
/// interval goes without service.
std::optional<Address> failover(Address primary, std::optional<Address> backup,
                                const std::function<bool(Address)>& live);

inline constexpr int kMaxSocietyForCount = 256;

/// (sum over m = 1..n of C(n, m))^2 = (2^n - 1)^2, exactly.
boost::multiprecision::cpp_int trust_relation_count(int n);

}  // namespace safetrust::rwp
