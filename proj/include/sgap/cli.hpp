#pragma once

#include "sgap/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace sgap {

enum ExitCode : int {
    exit_success = 0,
    exit_usage = 1,
    exit_config = 2,
    exit_numeric = 3,
    exit_verification = 4,
};

struct RunOptions {
    std::optional<std::filesystem::path> out_dir{};
    std::optional<std::uint64_t> seed{};
    bool bits = false;
    bool json_report = false;
};

inline constexpr std::string_view subcommands[] = {
    "bounds", "entropy", "pressure-table", "language-count", "points", "boxdim", "verify"};

/// Executes one subcommand and maps failures onto exit codes. Reports go to
/// `out`; diagnostics go to `err`. With out_dir set, CSV and JSON outputs
/// are written there instead of `out`.
int run(std::string_view subcommand, Scenario scenario, const RunOptions& options,
        std::ostream& out, std::ostream& err);

}  // namespace sgap
