// cli.hpp
// Command-line front end. Exit codes:
//   0 clean, 1 usage or configuration error, 2 coverage / resource / I/O error,
//   3 an inequality or identity failed inside its domain,
//   4 a Goldbach failure (d_E = 0) other than E = 4; E = 4 counts with --strict.
// When 3 and 4 both apply, 4 wins.
#pragma once

#include "sce/report.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sce {

enum class Command { decompose, interactions, types, census, goldbach, bounds, dusart, thresholds, theorem };

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitResource = 2,
    kExitInequality = 3,
    kExitGoldbach = 4,
};

struct CliConfig {
    Command command = Command::types;
    std::optional<std::int64_t> number;  // single E (or x)
    std::optional<std::int64_t> from;
    std::optional<std::int64_t> to;
    std::optional<std::int64_t> limit;   // sieve limit; default is the largest number referenced
    double constant = kLemmaConstant;
    Format format = Format::table;
    std::optional<std::filesystem::path> output;
    unsigned workers = 0;
    std::optional<std::filesystem::path> checkpoint;
    std::int64_t chunk_size = 1024;
    bool strict = false;
    double tolerance = 1e-9;
};

// Executes a parsed configuration, writing the report to config.output or
// `out`, and diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (args[0] is the program name) and runs.
// Environment: SCE_WORKERS and SCE_CHECKPOINT supply --workers and
// --checkpoint when the flags are absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sce
