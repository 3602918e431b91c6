#pragma once

// Classical explicit RK4 with a conservative auto-dt heuristic. Conservation
// is monitored, not enforced; the optional post-step projections are off by
// default and recorded in run metadata when enabled.

#include <stdexcept>

#include "liemag/rhs.hpp"

namespace liemag {

struct StepOptions {
  bool hermitize = false;          // project g, a onto their Hermitian part
  bool reorthogonalize_r = false;  // nearest-orthogonal projection of R
  bool renormalize_n = false;      // rescale n to unit length
  RhsImpl impl = RhsImpl::Parallel;
};

struct IntegrationBlowup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stability-headroom estimate: dt = safety / (gradient rate + homogeneous
// rate), which sits below the c*h^2/(|Jbar|*max-norm) ceiling. The
// homogeneous precession terms (J, A) enter the rate so cases with uniform
// precession stay accurate, not merely stable.
double auto_dt(const Model& m, const SimState& st, double safety = 0.2);

// One RK4 step on all dynamical fields; advances time and step count.
// Throws IntegrationBlowup if any field stops being finite.
void step_rk4(SimState& st, const Model& m, double dt, const StepOptions& opts = {});

// st += a * rate on every field (used by tests and the stepper).
void add_scaled(SimState& st, double a, const SimState& rate);

}  // namespace liemag
