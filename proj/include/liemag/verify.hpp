#pragma once

// Property suites behind `verify <suite>`: every residual the algebra,
// energy, and dynamics layers claim is checked here and reported with its
// tolerance. The acceptance suite drives the same entry points.

#include <cstdint>
#include <string>
#include <vector>

#include "liemag/model.hpp"

namespace liemag {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

std::vector<CheckResult> verify_algebra(int trials = 100, uint64_t seed = 77);
std::vector<CheckResult> verify_casimir(int trials = 100, uint64_t seed = 78);
std::vector<CheckResult> verify_gradient();
std::vector<CheckResult> verify_equivalence();
std::vector<CheckResult> verify_conservation(int64_t steps = 10000);

// suite in {algebra, casimir, gradient, equivalence, conservation, all};
// throws std::invalid_argument otherwise.
std::vector<CheckResult> verify_suite(const std::string& suite);

bool all_pass(const std::vector<CheckResult>& checks);
std::string checks_to_json(const std::string& suite, const std::vector<CheckResult>& checks);

// --------------------------------------------------------------------------
// Helpers shared with the acceptance suite
// --------------------------------------------------------------------------

// Fixed-horizon one-coarse-step Richardson ratio err(dt)/err(dt/2) against a
// 64-substep reference; 16 for a 4th-order step.
double richardson_ratio(const Model& m, uint64_t seed);

struct DispersionResult {
  double measured = 0.0;
  double predicted = 0.0;  // Jbar * s0 * k2_discrete
  double fit_residual = 0.0;
  bool degenerate = false;
};

// Runs the spin-wave measurement on an npoints 1D grid.
DispersionResult run_dispersion(int npoints, int mode, double s0, double amplitude,
                                double jbar, int64_t steps, double dt, int cadence);

// Conservation over `steps` RK4 steps at auto dt for one case; returns
// (energy drift, max charge drift, max pointwise casimir drift).
struct ConservationDrift {
  double energy = 0.0;
  double charge = 0.0;
  double casimir = 0.0;
};
ConservationDrift run_conservation(const Model& m, int64_t steps, uint64_t seed);

// Standard per-case model constants used across the suites.
Model standard_model(CaseId c);

}  // namespace liemag
