#pragma once

// Conservation monitors, flux densities and continuity residuals, spin-wave
// dispersion measurement.
//
// Charge fluxes are link-centered forward-difference bilinears, the exact
// discrete counterparts of the kernels' Laplacian bilinears: the identity
// rate = -div(flux) holds to roundoff with the backward-difference
// divergence. The energy flux is only second-order consistent (the discrete
// product rule is inexact), so its continuity residual is checked to shrink
// as h^2 rather than to vanish.

#include <complex>
#include <string>
#include <vector>

#include "liemag/energy.hpp"
#include "liemag/model.hpp"
#include "liemag/rhs.hpp"
#include "liemag/state.hpp"

namespace liemag {

// Fields whose volume integrals the case conserves (divergence-form rates).
std::vector<FieldId> conserved_fields(const Model& m);

// Human-readable component names per field ("s_x", "g_re_12", "sigma_12"...).
std::vector<std::string> component_names(FieldId id, const Model& m);

// Pointwise Casimir densities for the case (tr g^n, s^2, s.n, n^2, R^T R
// entries, tensor invariants), as named one-component fields.
std::vector<std::pair<std::string, Field>> casimir_fields(const Model& m,
                                                          const SimState& st);

struct ConservationReport {
  double time = 0.0;
  int64_t step = 0;
  double energy = 0.0;
  std::vector<std::pair<std::string, double>> charges;
  struct Extrema {
    std::string name;
    double min = 0.0, max = 0.0;
  };
  std::vector<Extrema> casimirs;
};

ConservationReport conservation_report(const Model& m, const SimState& st);

// Relative drift of `now` against `base`; each quantity is scaled by
// max(|base value|, 5% of the largest |base| in its group, 1e-9).
struct DriftReport {
  double energy = 0.0;
  std::vector<std::pair<std::string, double>> charges;
  double max_charge = 0.0;
};
DriftReport drift_report(const ConservationReport& now, const ConservationReport& base);

// Max over sites and casimirs of |c(x,t)-c(x,0)| / scale(c).
double max_pointwise_casimir_drift(const Model& m,
                                   const std::vector<std::pair<std::string, Field>>& base,
                                   const SimState& now);

// Link-centered charge flux densities, one Field per axis per conserved field.
struct CaseFlux {
  FieldId fid;
  std::vector<Field> per_axis;
};
std::vector<CaseFlux> flux_field(const Model& m, const SimState& st);

// Max over conserved fields/components/sites of |rate + div(flux)|.
double charge_continuity_residual(const Model& m, const SimState& st);

// Energy flux q_k (matrix cases and LL_HEISENBERG; others are reported as
// unsupported) and the residual |de/dt + div q| (O(h^2)).
std::vector<Field> energy_flux(const Model& m, const SimState& st);
double energy_continuity_residual(const Model& m, const SimState& st);

// --------------------------------------------------------------------------
// Dispersion
// --------------------------------------------------------------------------

// Transverse mode amplitude of the spin field about the z axis:
// (1/N) sum_x (s_x + i s_y) exp(-i k x), k = 2 pi mode / L.
std::complex<double> transverse_mode_amplitude(const Field& s, int mode);

struct DispersionFit {
  double omega = 0.0;     // fitted angular frequency (phase runs as -omega t)
  double residual = 0.0;  // max phase deviation from the linear fit
  bool degenerate = false;
};

// Fits the complex phase of an amplitude time series sampled every dt.
DispersionFit measure_dispersion(const std::vector<std::complex<double>>& series,
                                 double dt);

// Discrete dispersion target: omega = Jbar * s0 * k2, k2 = (2/h^2)(1-cos kh).
double k2_discrete(int mode, int npoints, double h);

}  // namespace liemag
