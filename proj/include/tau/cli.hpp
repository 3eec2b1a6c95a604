#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tau/high_real.hpp"

namespace tau::cli {

enum class Command { compute, verify, bounds, stats, lseries, audit };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::compute;
  std::optional<std::uint64_t> limit;
  std::string algo = "eta";                 // eta | niebur | eisenstein | multiplicative | all
  std::optional<HighReal> fixed_c;          // empty means implied
  std::uint64_t scan_start = 16;
  Format format = Format::csv;
  std::optional<std::string> cache_path;
  std::vector<std::uint64_t> checkpoints;
  HighReal s{8L};
  std::optional<std::uint64_t> n;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

// Parses argv-style arguments (without the program name) and runs the command.
// Reports go to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs an already-parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tau::cli
