#pragma once

// Case catalogue and exchange constants. A Model selects one of the magnetic
// orderings together with its energy-model constants (J, Jbar, A, B) and,
// for the matrix cases, the spin (dim = 2s+1).

#include <string>
#include <vector>

namespace liemag {

enum class CaseId {
  NormalSuN,      // Hermitian g, any dim: gdot = -i Jbar [g, lap g]
  DegenerateSuN,  // g and order parameter a
  LlHeisenberg,   // spin vector s
  Uniaxial,       // s and antiferromagnetic unit vector n
  Biaxial,        // s and rotation matrix R
  Su3Normal,      // spin-1 (s, q) component picture
  Nematic,        // s and symmetric tensor w
  Su3Broken,      // dim-3 degenerate pair (g, a)
  Su2xSu2,        // two spin vectors u, s
  So6,            // 15 Dirac components
  So4,            // antisymmetric sigma block only
  So5Full,        // gamma_a + gamma_ab
  So5Tensor,      // gamma_ab only
};

const std::vector<CaseId>& all_cases();
std::string case_name(CaseId c);          // e.g. "NORMAL_SU_N"
CaseId case_from_name(const std::string& s);  // throws with the valid list

enum class FieldId {
  G,       // complex Hermitian dim x dim
  Aord,    // complex Hermitian order parameter
  S,       // 3-vector
  N,       // 3-vector
  Rmat,    // 3x3 rotation
  Q,       // 3x3 symmetric traceless (6 stored)
  W,       // 3x3 symmetric (6 stored)
  U,       // 3-vector
  Gamma5,  // scalar
  Gamma,   // 4 components
  Gbar,    // 4 components
  Sigma,   // antisymmetric 4x4 (6 stored)
  GammaA,  // 5 components
  GammaAb, // antisymmetric 5x5 (10 stored)
  GAnti,   // real antisymmetric dim x dim (library-level, Eq-free ordering)
};

std::string field_name(FieldId f);

struct Model {
  CaseId case_id = CaseId::LlHeisenberg;
  double spin = 0.5;  // matrix cases only; dim = 2s+1
  double J = 0.0;
  double Jbar = 1.0;
  double A = 0.0;
  double B = 1.0;

  int dim() const { return static_cast<int>(2.0 * spin + 1.5); }

  bool is_matrix_case() const {
    return case_id == CaseId::NormalSuN || case_id == CaseId::DegenerateSuN ||
           case_id == CaseId::Su3Broken;
  }

  // Throws on constraint violations (positivity of the gradient constants,
  // spin range for matrix cases).
  void validate() const;

  // Field set the case evolves, with component counts.
  std::vector<std::pair<FieldId, int>> required_fields() const;
};

// Component counts for a field in the context of a model (matrix dims).
int field_ncomp(FieldId f, const Model& m);

}  // namespace liemag
