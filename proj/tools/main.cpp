#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "safetrust/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Trust-managed adaptive safety simulator for sensor networks"};
  app.require_subcommand(1);

  std::string run_scenario, run_out;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Simulate a scenario and write CSV traces");
  run->add_option("scenario", run_scenario, "Scenario file")->required();
  run->add_option("--out", run_out, "Output directory")->required();
  run->add_option("--seed", seed, "Override the scenario seed");

  std::string validate_scenario;
  auto* validate = app.add_subcommand("validate", "Parse and check a scenario without running it");
  validate->add_option("scenario", validate_scenario, "Scenario file")->required();

  std::string society;
  auto* complexity = app.add_subcommand("complexity", "Count the trust relations in a society of n");
  complexity->add_option("n", society, "Society size (1..256)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return safetrust::cli::kExitScenario;
  }

  if (*run) return safetrust::cli::cmd_run(run_scenario, run_out, seed, std::cout, std::cerr);
  if (*validate) return safetrust::cli::cmd_validate(validate_scenario, std::cout, std::cerr);
  return safetrust::cli::cmd_complexity(society, std::cout, std::cerr);
}
