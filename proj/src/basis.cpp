#include "liemag/basis.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace liemag {

namespace {

constexpr cplx I{0.0, 1.0};

double eps3(int a, int b, int c) {
  return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
}

void validate_basis(const BasisSet& b, double tol = 1e-13) {
  const int m = b.size();
  for (int i = 0; i < m; ++i) {
    if (b.elems[i].herm_defect() > tol)
      throw std::logic_error("basis " + b.name + ": element " + b.labels[i] + " not Hermitian");
    if (std::abs(b.elems[i].trace()) > tol)
      throw std::logic_error("basis " + b.name + ": element " + b.labels[i] + " not traceless");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      cplx t = (b.elems[i] * b.elems[j]).trace();
      if (std::abs(t) > tol)
        throw std::logic_error("basis " + b.name + ": gram not diagonal at " + b.labels[i] + "," +
                               b.labels[j]);
    }
}

BasisSet finish(BasisSet b) {
  b.gram_diag.resize(b.elems.size());
  for (size_t i = 0; i < b.elems.size(); ++i) {
    cplx t = (b.elems[i] * b.elems[i]).trace();
    b.gram_diag[i] = t.real();
  }
  validate_basis(b);
  return b;
}

}  // namespace

int BasisSet::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Pauli
// ---------------------------------------------------------------------------

CMat pauli_op(int alpha) {
  CMat m(2);
  switch (alpha) {
    case 0:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case 1:
      m.at(0, 1) = -I;
      m.at(1, 0) = I;
      break;
    case 2:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli_op: index out of range");
  }
  return m;
}

const BasisSet& pauli_basis() {
  static const BasisSet b = [] {
    BasisSet r;
    r.dim = 2;
    r.name = "pauli";
    r.labels = {"s_x", "s_y", "s_z"};
    for (int a = 0; a < 3; ++a) r.elems.push_back(pauli_op(a));
    return finish(r);
  }();
  return b;
}

// ---------------------------------------------------------------------------
// Spin 1: (s_alpha)_{mu nu} = -i eps_{alpha mu nu},
//         (q_{beta alpha})_{mu nu} = (d_bm d_an + d_bn d_am - 2 d_ba d_mn/3)/2
// ---------------------------------------------------------------------------

CMat spin1_spin_op(int alpha) {
  CMat m(3);
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) m.at(mu, nu) = -I * eps3(alpha, mu, nu);
  return m;
}

CMat spin1_quad_op(int beta, int alpha) {
  CMat m(3);
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      double v = 0.0;
      if (beta == mu && alpha == nu) v += 1.0;
      if (beta == nu && alpha == mu) v += 1.0;
      if (beta == alpha && mu == nu) v -= 2.0 / 3.0;
      m.at(mu, nu) = 0.5 * v;
    }
  return m;
}

const BasisSet& spin1_basis() {
  static const BasisSet b = [] {
    BasisSet r;
    r.dim = 3;
    r.name = "spin1";
    r.labels = {"s_x", "s_y", "s_z", "q_xy", "q_yz", "q_zx", "q_x2y2", "q_zz"};
    for (int a = 0; a < 3; ++a) r.elems.push_back(spin1_spin_op(a));
    r.elems.push_back(spin1_quad_op(0, 1));
    r.elems.push_back(spin1_quad_op(1, 2));
    r.elems.push_back(spin1_quad_op(2, 0));
    r.elems.push_back(spin1_quad_op(0, 0) - spin1_quad_op(1, 1));
    r.elems.push_back(spin1_quad_op(2, 2));
    return finish(r);
  }();
  return b;
}

// ---------------------------------------------------------------------------
// Dirac set. Representation: gamma_4 diagonal, gamma_k off-block Pauli.
// gamma5 = gamma1 gamma2 gamma3 gamma4 is Hermitian and squares to the
// identity for this all-Hermitian anticommuting quartet; an extra i factor
// would make it anti-Hermitian, so none is applied.
// ---------------------------------------------------------------------------

CMat dirac_gamma(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("dirac_gamma: index out of range");
  CMat m(4);
  if (mu == 3) {
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 2) = -1.0;
    m.at(3, 3) = -1.0;
    return m;
  }
  CMat s = pauli_op(mu);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j + 2) = s.at(i, j);
      m.at(i + 2, j) = s.at(i, j);
    }
  return m;
}

CMat dirac_gamma5() {
  return dirac_gamma(0) * dirac_gamma(1) * dirac_gamma(2) * dirac_gamma(3);
}

CMat dirac_gbar(int mu) { return I * (dirac_gamma5() * dirac_gamma(mu)); }

CMat dirac_sigma(int mu, int nu) {
  return 0.5 * I * commutator(dirac_gamma(mu), dirac_gamma(nu));
}

const BasisSet& dirac_basis() {
  static const BasisSet b = [] {
    BasisSet r;
    r.dim = 4;
    r.name = "dirac";
    r.labels.push_back("gamma5");
    r.elems.push_back(dirac_gamma5());
    const char* idx = "1234";
    for (int mu = 0; mu < 4; ++mu) {
      r.labels.push_back(std::string("gamma_") + idx[mu]);
      r.elems.push_back(dirac_gamma(mu));
    }
    for (int mu = 0; mu < 4; ++mu) {
      r.labels.push_back(std::string("gbar_") + idx[mu]);
      r.elems.push_back(dirac_gbar(mu));
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        r.labels.push_back(std::string("sigma_") + idx[mu] + idx[nu]);
        r.elems.push_back(dirac_sigma(mu, nu));
      }
    return finish(r);
  }();
  return b;
}

// ---------------------------------------------------------------------------
// so(5) split: gamma_a = (gamma_mu, gamma5), gamma_ab = i[gamma_a, gamma_b]/2
// ---------------------------------------------------------------------------

CMat so5_gamma(int a) {
  if (a < 0 || a > 4) throw std::invalid_argument("so5_gamma: index out of range");
  return a == 4 ? dirac_gamma5() : dirac_gamma(a);
}

CMat so5_gamma_pair(int a, int b) {
  return 0.5 * I * commutator(so5_gamma(a), so5_gamma(b));
}

const BasisSet& so5_basis() {
  static const BasisSet b = [] {
    BasisSet r;
    r.dim = 4;
    r.name = "so5";
    const char* idx = "12345";
    for (int a = 0; a < 5; ++a) {
      r.labels.push_back(std::string("gamma_") + idx[a]);
      r.elems.push_back(so5_gamma(a));
    }
    for (int a = 0; a < 5; ++a)
      for (int c = a + 1; c < 5; ++c) {
        r.labels.push_back(std::string("gamma_") + idx[a] + idx[c]);
        r.elems.push_back(so5_gamma_pair(a, c));
      }
    return finish(r);
  }();
  return b;
}

// ---------------------------------------------------------------------------
// Expansion over a basis
// ---------------------------------------------------------------------------

ExpandResult expand(const CMat& a, const BasisSet& basis, double tol) {
  if (a.dim() != basis.dim) throw std::invalid_argument("expand: dimension mismatch");
  ExpandResult out;
  out.coeffs.resize(basis.size());
  for (int k = 0; k < basis.size(); ++k) {
    cplx t = (a * basis.elems[k]).trace();
    out.coeffs[k] = t.real() / basis.gram_diag[k];
  }
  CMat rec = reconstruct(basis, out.coeffs);
  out.residual = (a - rec).frob_norm();
  out.representable = out.residual <= tol * std::max(1.0, a.frob_norm());
  return out;
}

CMat reconstruct(const BasisSet& basis, const std::vector<double>& coeffs) {
  if (coeffs.size() != static_cast<size_t>(basis.size()))
    throw std::invalid_argument("reconstruct: coefficient count mismatch");
  CMat r(basis.dim);
  for (int k = 0; k < basis.size(); ++k) r += basis.elems[k] * coeffs[k];
  return r;
}

std::string basis_to_json(const BasisSet& basis) {
  nlohmann::json j;
  j["name"] = basis.name;
  j["dim"] = basis.dim;
  j["labels"] = basis.labels;
  j["gram_diag"] = basis.gram_diag;
  nlohmann::json elems = nlohmann::json::array();
  for (const CMat& m : basis.elems) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < m.dim(); ++k)
        row.push_back({m.at(i, k).real(), m.at(i, k).imag()});
      rows.push_back(row);
    }
    elems.push_back(rows);
  }
  j["elements"] = elems;
  return j.dump(2);
}

}  // namespace liemag
