// commands.hpp — the named experiments behind the CLI subcommands; each
// writes plot-ready CSV payloads plus a JSON run manifest with checksums
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinbit/config.hpp"

namespace spinbit {
namespace cli {

struct CommandResult {
    std::vector<std::filesystem::path> files;  // payload files, in emission order
    nlohmann::json manifest;
    std::filesystem::path manifest_path;
};

// Eigenvalues along a longitudinal or medium-axis field sweep.
CommandResult cmd_spectrum(const RunConfig& config, const std::filesystem::path& out_dir);

// Relaxation time versus transverse field, plus per-field temperature scans
// and their Arrhenius fits.
CommandResult cmd_relaxation(const RunConfig& config, const std::filesystem::path& out_dir);

// The four-step erasure-storage cycle: trajectory, magnetization loops, and
// the work summary.
CommandResult cmd_protocol(const RunConfig& config, const std::filesystem::path& out_dir);

// Synthetic crystal-alignment run: plane sweeps, axis recovery, hard-axis
// interference scan.
CommandResult cmd_align(const RunConfig& config, const std::filesystem::path& out_dir);

// Energy-time cost comparison chart.
CommandResult cmd_chart(const RunConfig& config, const std::filesystem::path& out_dir);

// Dispatch by subcommand name; throws ConfigError for unknown names.
CommandResult run_command(const std::string& name, const RunConfig& config,
                          const std::filesystem::path& out_dir);

}  // namespace cli
}  // namespace spinbit
