#include "liemag/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace liemag {

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> cs = {
      CaseId::NormalSuN, CaseId::DegenerateSuN, CaseId::LlHeisenberg, CaseId::Uniaxial,
      CaseId::Biaxial,   CaseId::Su3Normal,     CaseId::Nematic,      CaseId::Su3Broken,
      CaseId::Su2xSu2,   CaseId::So6,           CaseId::So4,          CaseId::So5Full,
      CaseId::So5Tensor};
  return cs;
}

std::string case_name(CaseId c) {
  switch (c) {
    case CaseId::NormalSuN: return "NORMAL_SU_N";
    case CaseId::DegenerateSuN: return "DEGENERATE_SU_N";
    case CaseId::LlHeisenberg: return "LL_HEISENBERG";
    case CaseId::Uniaxial: return "UNIAXIAL";
    case CaseId::Biaxial: return "BIAXIAL";
    case CaseId::Su3Normal: return "SU3_NORMAL";
    case CaseId::Nematic: return "NEMATIC";
    case CaseId::Su3Broken: return "SU3_BROKEN";
    case CaseId::Su2xSu2: return "SU2xSU2";
    case CaseId::So6: return "SO6";
    case CaseId::So4: return "SO4";
    case CaseId::So5Full: return "SO5_FULL";
    case CaseId::So5Tensor: return "SO5_TENSOR";
  }
  return "?";
}

CaseId case_from_name(const std::string& s) {
  for (CaseId c : all_cases())
    if (case_name(c) == s) return c;
  std::ostringstream os;
  os << "unknown case id '" << s << "'; valid cases:";
  for (CaseId c : all_cases()) os << " " << case_name(c);
  throw std::invalid_argument(os.str());
}

std::string field_name(FieldId f) {
  switch (f) {
    case FieldId::G: return "g";
    case FieldId::Aord: return "a";
    case FieldId::S: return "s";
    case FieldId::N: return "n";
    case FieldId::Rmat: return "R";
    case FieldId::Q: return "q";
    case FieldId::W: return "w";
    case FieldId::U: return "u";
    case FieldId::Gamma5: return "gamma5";
    case FieldId::Gamma: return "gamma";
    case FieldId::Gbar: return "gbar";
    case FieldId::Sigma: return "sigma";
    case FieldId::GammaA: return "gamma_a";
    case FieldId::GammaAb: return "gamma_ab";
    case FieldId::GAnti: return "ga";
  }
  return "?";
}

int field_ncomp(FieldId f, const Model& m) {
  switch (f) {
    case FieldId::G:
    case FieldId::Aord: return 2 * m.dim() * m.dim();
    case FieldId::S:
    case FieldId::N:
    case FieldId::U: return 3;
    case FieldId::Rmat: return 9;
    case FieldId::Q:
    case FieldId::W:
    case FieldId::Sigma: return 6;
    case FieldId::Gamma5: return 1;
    case FieldId::Gamma:
    case FieldId::Gbar: return 4;
    case FieldId::GammaA: return 5;
    case FieldId::GammaAb: return 10;
    case FieldId::GAnti: return m.dim() * (m.dim() - 1) / 2;
  }
  return 0;
}

void Model::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("model: " + msg);
  };
  if (is_matrix_case()) {
    int d = dim();
    require(std::abs(2.0 * spin + 1.0 - d) < 1e-9 && d >= 2 && d <= 4,
            "spin must be 1/2, 1 or 3/2");
    if (case_id == CaseId::Su3Broken) require(d == 3, "SU3_BROKEN requires spin 1");
  }
  switch (case_id) {
    case CaseId::NormalSuN:
    case CaseId::LlHeisenberg:
    case CaseId::Su3Normal:
    case CaseId::Su2xSu2:
    case CaseId::So6:
    case CaseId::So4:
    case CaseId::So5Full:
    case CaseId::So5Tensor:
      require(Jbar > 0.0, "Jbar must be positive");
      break;
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken:
      require(Jbar > 0.0, "Jbar must be positive");
      require(B > 0.0, "B must be positive");
      break;
    case CaseId::Uniaxial:
    case CaseId::Biaxial:
    case CaseId::Nematic:
      require(B > 0.0, "B must be positive");
      break;
  }
}

std::vector<std::pair<FieldId, int>> Model::required_fields() const {
  auto n = [this](FieldId f) { return std::make_pair(f, field_ncomp(f, *this)); };
  switch (case_id) {
    case CaseId::NormalSuN: return {n(FieldId::G)};
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken: return {n(FieldId::G), n(FieldId::Aord)};
    case CaseId::LlHeisenberg: return {n(FieldId::S)};
    case CaseId::Uniaxial: return {n(FieldId::S), n(FieldId::N)};
    case CaseId::Biaxial: return {n(FieldId::S), n(FieldId::Rmat)};
    case CaseId::Su3Normal: return {n(FieldId::S), n(FieldId::Q)};
    case CaseId::Nematic: return {n(FieldId::S), n(FieldId::W)};
    case CaseId::Su2xSu2: return {n(FieldId::U), n(FieldId::S)};
    case CaseId::So6:
      return {n(FieldId::Gamma5), n(FieldId::Gamma), n(FieldId::Gbar), n(FieldId::Sigma)};
    case CaseId::So4: return {n(FieldId::Sigma)};
    case CaseId::So5Full: return {n(FieldId::GammaA), n(FieldId::GammaAb)};
    case CaseId::So5Tensor: return {n(FieldId::GammaAb)};
  }
  return {};
}

}  // namespace liemag
