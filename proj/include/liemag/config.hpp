#pragma once

// Run configuration: sectioned key = value text. Runs are archival, so the
// manifest echoes every key back together with the derived quantities
// (dt actually used, column schema, library version).

#include <cstdint>
#include <map>
#include <string>

#include "liemag/integrate.hpp"
#include "liemag/model.hpp"
#include "liemag/state.hpp"

namespace liemag {

struct RunConfig {
  Model model;
  Grid grid;
  IcSpec ic;
  double dt = 0.0;  // 0 = auto
  int64_t steps = 100;
  int report_cadence = 10;
  int64_t snapshot_cadence = 0;  // 0 = steps/10
  std::string output_dir = "out";
  StepOptions projections;

  void validate() const;
};

// Parses "key = value" lines under [section] headers; '#' starts a comment.
// Unknown keys are errors.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

// Full echo of the configuration (total: sufficient to reproduce the run).
std::string config_to_json(const RunConfig& c);

extern const char* kLiemagVersion;

}  // namespace liemag
