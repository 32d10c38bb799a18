#pragma once

#include "safetrust/sim/scenario.hpp"
#include "safetrust/sim/trace.hpp"

namespace safetrust::sim {

/// Runs the monitor-analyze-adapt loop for scenario.intervals rounds and
/// records every round. The trace is a pure function of the scenario
/// (seed included). Throws InvalidScenario before simulating anything.
SimulationTrace run(const Scenario& scenario);

}  // namespace safetrust::sim
