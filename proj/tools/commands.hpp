#pragma once

// CLI subcommands.  Each writes <name>.csv and <name>_summary.json into the
// output directory and returns the process exit code: 0 on success, 3 on a
// numerical/domain failure (error recorded in the summary JSON).  Config
// problems are handled by the caller (exit 2).

#include <cstdint>
#include <string>

#include "config.hpp"

namespace ffmono::cli {

int cmd_monodromy(const RunConfig& cfg, const std::string& out_dir);
int cmd_normalize(const RunConfig& cfg, const std::string& out_dir);
int cmd_action(const RunConfig& cfg, const std::string& out_dir,
               std::uint64_t seed);
int cmd_scatter(const RunConfig& cfg, const std::string& out_dir, bool svg);
int cmd_oscillator(const RunConfig& cfg, const std::string& out_dir);

}  // namespace ffmono::cli
