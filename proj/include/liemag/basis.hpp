#pragma once

// Concrete generator bases: Pauli (dim 2), spin-1 spin+quadrupole (dim 3),
// the Dirac 15-element set and the so(5) split of it (dim 4). Each shipped
// basis is Hermitian, traceless, and orthogonal under the trace form; the
// per-element normalization is recorded in gram_diag.

#include <string>
#include <vector>

#include "liemag/smallmat.hpp"

namespace liemag {

struct BasisSet {
  int dim = 0;
  std::string name;
  std::vector<std::string> labels;
  std::vector<CMat> elems;
  std::vector<double> gram_diag;  // tr(T_a T_a)

  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const std::string& label) const;  // -1 if absent
};

// sigma_x, sigma_y, sigma_z; gram 2*delta.
const BasisSet& pauli_basis();

// s_x..s_z plus five orthogonal quadrupole combinations; gram diagonal.
const BasisSet& spin1_basis();

// gamma5, gamma_mu, gbar_mu = i*gamma5*gamma_mu, sigma_{mu nu}; gram 4*delta.
const BasisSet& dirac_basis();

// gamma_a = (gamma_mu, gamma5) and gamma_ab = i[gamma_a, gamma_b]/2, a<b.
const BasisSet& so5_basis();

// Index-addressed operators backing the bases (used by the algebra checks).
CMat pauli_op(int alpha);                 // alpha in 0..2
CMat spin1_spin_op(int alpha);            // (s_alpha)_{mu nu} = -i eps_{alpha mu nu}
CMat spin1_quad_op(int beta, int alpha);  // symmetric traceless quadrupole operator
CMat dirac_gamma(int mu);                 // mu in 0..3
CMat dirac_gamma5();
CMat dirac_gbar(int mu);
CMat dirac_sigma(int mu, int nu);   // i[gamma_mu, gamma_nu]/2
CMat so5_gamma(int a);              // a in 0..4, so5_gamma(4) == gamma5
CMat so5_gamma_pair(int a, int b);  // i[gamma_a, gamma_b]/2

struct ExpandResult {
  std::vector<double> coeffs;
  double residual = 0.0;  // Frobenius norm of A - sum c_a T_a
  bool representable = false;
};

// Coefficients c_a = tr(A T_a)/gram_aa. Residual is reported (and the result
// flagged) when the basis does not span A.
ExpandResult expand(const CMat& a, const BasisSet& basis, double tol = 1e-12);

CMat reconstruct(const BasisSet& basis, const std::vector<double>& coeffs);

// JSON text for external verification: labels, entries as [re, im], gram.
std::string basis_to_json(const BasisSet& basis);

}  // namespace liemag
