#pragma once

// Exchange energy densities and their functional derivatives, case by case.
// Gradient terms are built from forward differences; the functional
// derivative of those terms is the exact discrete adjoint, which is the
// 3-point Laplacian. The derivative is reported per stored component plane,
// treating every stored entry as independent (that is what the central
// finite-difference check probes).

#include "liemag/model.hpp"
#include "liemag/state.hpp"

namespace liemag {

// Pointwise e(x), one component.
Field energy_density(const Model& m, const SimState& st);

// Integral of the energy density over the box.
double total_energy(const Model& m, const SimState& st);

// dH/d(component plane) of the named field; same shape as the field.
Field functional_derivative(const Model& m, const SimState& st, FieldId id);

// d/dt of e(x) along a given state velocity (analytic, e is quadratic in the
// fields and their forward differences). Used by the energy-continuity check.
Field energy_density_rate(const Model& m, const SimState& st, const SimState& rate);

}  // namespace liemag
