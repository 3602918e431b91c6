#pragma once

// Run orchestration and table export: the pieces behind the CLI subcommands.

#include <string>

#include "liemag/config.hpp"

namespace liemag {

// Executes a configured run: conservation CSV, periodic + final snapshots,
// manifest. Returns the process exit code (0 done, 2 blow-up abort). Assumes
// the config already validated; a lock file guards the output directory.
int run_simulation(const RunConfig& config);

// Writes every shipped bracket table and basis set as JSON, plus the
// reference-relation comparison report (text and JSON).
void export_tables(const std::string& dir);

}  // namespace liemag
