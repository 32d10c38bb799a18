#include "safetrust/cli/trace_csv.hpp"

#include <cstdio>
#include <set>
#include <string>
#include <vector>

namespace safetrust::cli {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

template <typename T>
std::string optional_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

std::string motes_csv(const sim::SimulationTrace& trace) {
  std::string out = kMotesHeader;
  out += '\n';
  for (const auto& interval : trace.intervals) {
    for (const auto& m : interval.motes) {
      out += std::to_string(interval.index) + ',' + std::to_string(m.addr) + ',' + (m.alive ? '1' : '0') + ',' +
             fixed6(m.energy_j) + ',' + optional_field(m.pcp) + ',' + optional_field(m.roc) + ',' +
             (m.is_hacp ? '1' : '0') + ',' + optional_field(m.selected_peer) + '\n';
    }
  }
  return out;
}

std::string pairs_csv(const sim::SimulationTrace& trace) {
  std::string out = kPairsHeader;
  out += '\n';
  for (const auto& interval : trace.intervals) {
    for (const auto& p : interval.pairs) {
      out += std::to_string(interval.index) + ',' + std::to_string(p.src) + ',' + std::to_string(p.dst) + ',' +
             fixed6(p.engine_metric) + ',';
      if (p.trust) {
        out += fixed6(p.trust->trust) + ',' + fixed6(p.trust->confidence) + ',' + fixed6(p.trust->trustworthiness);
      } else {
        out += ",";
      }
      out += '\n';
    }
  }
  return out;
}

RunSummary summarize(const sim::SimulationTrace& trace) {
  RunSummary s;
  if (trace.intervals.empty()) return s;

  std::vector<tw::TrustRecord> records;
  for (const auto& p : trace.intervals.back().pairs) {
    if (p.trust) records.push_back(*p.trust);
  }
  if (!records.empty()) s.system_trustworthiness = tw::system_trustworthiness(records);

  std::optional<sim::Address> last;
  double theta_sum = 0.0;
  for (const auto& interval : trace.intervals) {
    theta_sum += interval.theta_s;
    if (interval.service_gap) ++s.service_gaps;
    if (interval.active_hacp) {
      if (last && *last != *interval.active_hacp) ++s.hacp_rotations;
      last = interval.active_hacp;
    }
  }
  s.mean_theta_s = theta_sum / static_cast<double>(trace.intervals.size());
  for (const auto& m : trace.intervals.back().motes) {
    if (!m.alive) ++s.mote_deaths;
  }
  return s;
}

std::string summary_text(const sim::SimulationTrace& trace) {
  const RunSummary s = summarize(trace);
  std::string out;
  out += "engine: " + std::string(sim::to_string(trace.engine)) + '\n';
  out += "motes: " + std::to_string(trace.motes) + '\n';
  out += "intervals: " + std::to_string(trace.intervals.size()) + '\n';
  out += "system_trustworthiness: " + (s.system_trustworthiness ? fixed6(*s.system_trustworthiness) : "n/a") + '\n';
  out += "hacp_rotations: " + std::to_string(s.hacp_rotations) + '\n';
  out += "mote_deaths: " + std::to_string(s.mote_deaths) + '\n';
  out += "mean_theta_s: " + fixed6(s.mean_theta_s) + '\n';
  out += "service_gaps: " + std::to_string(s.service_gaps) + '\n';
  return out;
}

}  // namespace safetrust::cli
