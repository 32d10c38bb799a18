#pragma once

// Line-oriented scenario files:
//
//   [network]   motes, topology (ring|grid|random), radius, seed
//   [rwp]       intervals, theta_base_s, theta_min_s, theta_max_s,
//               failover (true|false), architecture (p2p|sink)
//   [trust]     engine (qad|beta|bayes), misbehavior_threshold,
//               weights (four comma-separated reals), qad_operator (d|g|k|h),
//               ref_tx_rate_bps, ref_response_ms, tw_x, tw_y
//   [energy]    capacity_j, init_j, harvest_j_per_s, tx_cost_j, rx_cost_j,
//               compute_cost_j
//   [links]     link_quality, tx_rate_bps, response_time_ms, uptime, noise,
//               plus override lines `link=<a>-<b> <field>=<v> ...` or
//               `peer=<p> <field>=<v> ...`
//   [events]    `at=<interval> link=<a>-<b> <field>=<v> ...`,
//               `at=<interval> peer=<p> <field>=<v> ...`,
//               `at=<interval> kill=<addr|hacp>`
//
// `#` starts a comment. Unknown sections or keys are errors, absent keys
// keep the defaults of sim::Scenario (init_j defaults to capacity_j), and
// the [network] section is mandatory.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "safetrust/sim/scenario.hpp"

namespace safetrust::cli {

/// Parse or validation failure; `line()` is 1-based, 0 when the problem is
/// not tied to one line (e.g. a missing section).
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses and validates. Throws ScenarioError.
sim::Scenario parse_scenario(std::string_view text);

/// Reads the whole file; throws std::runtime_error when it cannot.
std::string read_file(const std::filesystem::path& path);

}  // namespace safetrust::cli
