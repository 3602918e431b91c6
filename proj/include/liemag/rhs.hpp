#pragma once

// Case equations of motion. Two implementations with identical contracts:
// kernels:: (OpenMP-parallel over sites, the production path) and
// ref:: (plain serial loops kept as a reference for tests and benchmarks).

#include "liemag/model.hpp"
#include "liemag/state.hpp"

namespace liemag {

enum class RhsImpl { Parallel, Serial };

// Fills `rate` (same field structure as `st`) with the case's time
// derivatives. Throws if a required field is missing.
void compute_rhs_into(SimState& rate, const Model& m, const SimState& st,
                      RhsImpl impl = RhsImpl::Parallel);

SimState compute_rhs(const Model& m, const SimState& st,
                     RhsImpl impl = RhsImpl::Parallel);

// Antisymmetric-sector dynamics for a real antisymmetric matrix field
// (dim >= 3) under the quadratic model: madot = Jbar [m, lap m]. The
// homogeneous J term commutes away.
Field antisym_rhs(const Field& ga, int dim, double Jbar,
                  RhsImpl impl = RhsImpl::Parallel);

}  // namespace liemag
