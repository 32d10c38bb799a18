#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace safetrust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitScenario = 1;
inline constexpr int kExitIo = 2;

inline constexpr const char* kMotesFile = "motes.csv";
inline constexpr const char* kPairsFile = "pairs.csv";
inline constexpr const char* kSummaryFile = "summary.txt";

/// Simulates the scenario and writes motes.csv, pairs.csv and summary.txt
/// into `out_dir`. Nothing is written unless the run succeeds.
int cmd_run(const std::filesystem::path& scenario, const std::filesystem::path& out_dir,
            std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err);

int cmd_validate(const std::filesystem::path& scenario, std::ostream& out, std::ostream& err);

/// Prints the number of trust relations for a society of `n` (1..256).
int cmd_complexity(std::string_view n, std::ostream& out, std::ostream& err);

}  // namespace safetrust::cli
