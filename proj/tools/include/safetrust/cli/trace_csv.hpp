#pragma once

#include <string>

#include "safetrust/sim/trace.hpp"

namespace safetrust::cli {

inline constexpr const char* kMotesHeader = "interval,mote,alive,energy_j,pcp,roc,is_hacp,selected_peer";
inline constexpr const char* kPairsHeader = "interval,src,dst,engine_metric,t,c,T";

/// One row per (interval, mote).
std::string motes_csv(const sim::SimulationTrace& trace);

/// One row per (interval, defined pair); t, c and T are empty under QAD.
std::string pairs_csv(const sim::SimulationTrace& trace);

struct RunSummary {
  std::optional<double> system_trustworthiness;  // final interval
  int hacp_rotations = 0;
  int mote_deaths = 0;
  double mean_theta_s = 0.0;
  int service_gaps = 0;
};

RunSummary summarize(const sim::SimulationTrace& trace);
std::string summary_text(const sim::SimulationTrace& trace);

}  // namespace safetrust::cli
