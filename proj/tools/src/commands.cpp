#include "safetrust/cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "safetrust/cli/scenario_file.hpp"
#include "safetrust/cli/trace_csv.hpp"
#include "safetrust/rwp.hpp"
#include "safetrust/sim/simulator.hpp"

namespace safetrust::cli {

namespace fs = std::filesystem;

namespace {

bool write_all(const std::vector<std::pair<fs::path, std::string>>& files, std::ostream& err) {
  std::vector<fs::path> written;
  for (const auto& [path, body] : files) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (out) out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (out) out.close();
    if (!out) {
      err << "error: cannot write " << path.string() << '\n';
      std::error_code ec;
      for (const auto& w : written) fs::remove(w, ec);
      fs::remove(path, ec);
      return false;
    }
    written.push_back(path);
  }
  return true;
}

}  // namespace

int cmd_run(const fs::path& scenario_path, const fs::path& out_dir, std::optional<std::uint64_t> seed,
            std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(scenario_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  sim::Scenario scenario;
  try {
    scenario = parse_scenario(text);
  } catch (const ScenarioError& e) {
    err << scenario_path.string() << ": " << e.what() << '\n';
    return kExitScenario;
  }
  if (seed) scenario.seed = *seed;

  const sim::SimulationTrace trace = sim::run(scenario);
  const std::string summary = summary_text(trace);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    err << "error: cannot create " << out_dir.string() << '\n';
    return kExitIo;
  }
  if (!write_all({{out_dir / kMotesFile, motes_csv(trace)},
                  {out_dir / kPairsFile, pairs_csv(trace)},
                  {out_dir / kSummaryFile, summary}},
                 err)) {
    return kExitIo;
  }
  out << summary;
  return kExitOk;
}

int cmd_validate(const fs::path& scenario_path, std::ostream& out, std::ostream& err) {
  try {
    const sim::Scenario scenario = parse_scenario(read_file(scenario_path));
    out << scenario_path.string() << ": ok (" << scenario.motes << " motes, " << scenario.intervals
        << " intervals)\n";
    return kExitOk;
  } catch (const ScenarioError& e) {
    err << scenario_path.string() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitScenario;
}

int cmd_complexity(std::string_view n, std::ostream& out, std::ostream& err) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), value);
  if (n.empty() || ec != std::errc{} || ptr != n.data() + n.size()) {
    err << "error: '" << n << "' is not an integer\n";
    return kExitScenario;
  }
  if (value < 1 || value > rwp::kMaxSocietyForCount) {
    err << "error: n must be in 1.." << rwp::kMaxSocietyForCount << '\n';
    return kExitScenario;
  }
  out << rwp::trust_relation_count(value) << '\n';
  return kExitOk;
}

}  // namespace safetrust::cli
