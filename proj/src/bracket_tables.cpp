#include <cmath>
#include <stdexcept>

#include "liemag/bracket.hpp"

// Shipped bracket tables. Variable normalizations for the dim-4 component
// picture are fixed by requiring {s_a, s_b} = eps_abc s_c (and the matching
// integer constants in the u, v relations) to hold after projection:
//   s_a = i eps_abc g_bc,  u_a = i(g_a4 - g_4a),  v_a = g_a4 + g_4a,
//   g44 = g_44,            q_ab = (g_ab + g_ba)/2 - d_ab tr3(g)/3.
// These scales also reproduce the published {u,q}, {v,q}, {u,g44}, {v,g44}
// and {u,v} constants verbatim.

namespace liemag {

namespace {

constexpr cplx I{0.0, 1.0};

double eps3(int a, int b, int c) {
  return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
}

CMat unit(int dim, int i, int j, cplx v) {
  CMat m(dim);
  m.at(i, j) = v;
  return m;
}

const char* kAxis = "xyz";

// Hermitian entry components of one matrix sector.
std::vector<VarDef> herm_component_vars(int dim, const std::string& prefix, bool sector_g) {
  std::vector<VarDef> vars;
  for (int i = 0; i < dim; ++i) {
    VarDef v;
    v.label = prefix + "_" + std::to_string(i + 1) + std::to_string(i + 1);
    CMat coef = unit(dim, i, i, 1.0);
    CMat dual = coef;
    (sector_g ? v.coef_g : v.coef_a) = coef;
    (sector_g ? v.dual_g : v.dual_a) = dual;
    vars.push_back(v);
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      VarDef re;
      re.label = prefix + "_re_" + ij;
      CMat cre = unit(dim, i, j, 0.5);
      cre.at(j, i) = 0.5;
      CMat dre = unit(dim, i, j, 1.0);
      dre.at(j, i) = 1.0;
      (sector_g ? re.coef_g : re.coef_a) = cre;
      (sector_g ? re.dual_g : re.dual_a) = dre;
      vars.push_back(re);

      VarDef im;
      im.label = prefix + "_im_" + ij;
      CMat cim = unit(dim, i, j, -0.5 * I);
      cim.at(j, i) = 0.5 * I;
      CMat dim_ = unit(dim, i, j, I);
      dim_.at(j, i) = -I;
      (sector_g ? im.coef_g : im.coef_a) = cim;
      (sector_g ? im.dual_g : im.dual_a) = dim_;
      vars.push_back(im);
    }
  return vars;
}

std::vector<Casimir> trace_power_casimirs(int dim, Casimir::Kind kind,
                                          const std::string& sym) {
  std::vector<Casimir> cs;
  for (int n = 2; n <= dim; ++n) {
    Casimir c;
    c.name = "tr_" + sym + std::to_string(n);
    c.kind = kind;
    c.power = n;
    cs.push_back(c);
  }
  return cs;
}

Casimir sum_squares(const std::string& name, const std::vector<int>& vars) {
  Casimir c;
  c.name = name;
  c.kind = Casimir::Kind::Poly;
  for (int v : vars) c.terms.push_back({1.0, {v, v}});
  return c;
}

Casimir dot_product(const std::string& name, const std::vector<int>& a,
                    const std::vector<int>& b) {
  Casimir c;
  c.name = name;
  c.kind = Casimir::Kind::Poly;
  for (size_t k = 0; k < a.size(); ++k) c.terms.push_back({1.0, {a[k], b[k]}});
  return c;
}

// Spin functionals s_a = tr(g shat_a) for dim 3 (value equals i eps_abc g_bc).
VarDef spin1_s_var(int alpha, bool sector_g) {
  VarDef v;
  v.label = std::string("s_") + kAxis[alpha];
  if (!sector_g) v.label = std::string("n_") + kAxis[alpha];
  CMat coef = spin1_spin_op(alpha).transpose();
  CMat dual = spin1_spin_op(alpha) * 0.5;
  (sector_g ? v.coef_g : v.coef_a) = coef;
  (sector_g ? v.dual_g : v.dual_a) = dual;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Master and extended component tables
// ---------------------------------------------------------------------------

const BracketTable& master_table(int dim) {
  static const BracketTable t2 = derive_table("master_su2", 2, herm_component_vars(2, "g", true),
                                              trace_power_casimirs(2, Casimir::Kind::TracePowerG, "g"));
  static const BracketTable t3 = derive_table("master_su3", 3, herm_component_vars(3, "g", true),
                                              trace_power_casimirs(3, Casimir::Kind::TracePowerG, "g"));
  static const BracketTable t4 = derive_table("master_su4", 4, herm_component_vars(4, "g", true),
                                              trace_power_casimirs(4, Casimir::Kind::TracePowerG, "g"));
  switch (dim) {
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default: throw std::invalid_argument("master_table: dim must be 2, 3 or 4");
  }
}

namespace {
BracketTable make_extended(int dim) {
  std::vector<VarDef> vars = herm_component_vars(dim, "g", true);
  std::vector<VarDef> avars = herm_component_vars(dim, "a", false);
  vars.insert(vars.end(), avars.begin(), avars.end());
  return derive_table("extended_su" + std::to_string(dim), dim, std::move(vars),
                      trace_power_casimirs(dim, Casimir::Kind::TracePowerA, "a"));
}
}  // namespace

const BracketTable& extended_table(int dim) {
  static const BracketTable t2 = make_extended(2);
  static const BracketTable t3 = make_extended(3);
  static const BracketTable t4 = make_extended(4);
  switch (dim) {
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default: throw std::invalid_argument("extended_table: dim must be 2, 3 or 4");
  }
}

// ---------------------------------------------------------------------------
// Spin-1/2 component pictures
// ---------------------------------------------------------------------------

const BracketTable& pauli_coeff_table() {
  static const BracketTable t = [] {
    std::vector<VarDef> vars;
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("s_") + kAxis[a];
      v.coef_g = pauli_op(a).transpose() * 0.5;  // s_a = tr(g sigma_a)/2
      v.dual_g = pauli_op(a);
      vars.push_back(v);
    }
    std::vector<Casimir> cs = {sum_squares("s2", {0, 1, 2})};
    return derive_table("spin_vector", 2, std::move(vars), std::move(cs));
  }();
  return t;
}

const BracketTable& uniaxial_table() {
  static const BracketTable t = [] {
    std::vector<VarDef> vars;
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("s_") + kAxis[a];
      v.coef_g = pauli_op(a).transpose() * 0.5;
      v.dual_g = pauli_op(a);
      vars.push_back(v);
    }
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("n_") + kAxis[a];
      v.coef_a = pauli_op(a).transpose() * 0.5;
      v.dual_a = pauli_op(a);
      vars.push_back(v);
    }
    std::vector<Casimir> cs = {dot_product("s_dot_n", {0, 1, 2}, {3, 4, 5}),
                               sum_squares("n2", {3, 4, 5})};
    return derive_table("spin_afvector", 2, std::move(vars), std::move(cs));
  }();
  return t;
}

// ---------------------------------------------------------------------------
// Spin + rotation matrix (biaxial order): constructed directly. The spin
// index is the first index of R; each column of R transforms as a vector.
// ---------------------------------------------------------------------------

const BracketTable& rotor_table() {
  static const BracketTable t = [] {
    BracketTable tb;
    tb.name = "spin_rotor";
    tb.dim = 0;
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("s_") + kAxis[a];
      tb.vars.push_back(v);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        VarDef v;
        v.label = "R_" + std::to_string(i + 1) + std::to_string(j + 1);
        tb.vars.push_back(v);
      }
    const int n = tb.nv();
    tb.f.assign(static_cast<size_t>(n) * n * n, 0.0);
    auto sidx = [](int a) { return a; };
    auto ridx = [](int i, int j) { return 3 + 3 * i + j; };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          double e = eps3(a, b, c);
          if (e != 0.0) tb.fc(sidx(a), sidx(b), sidx(c)) = e;
        }
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int l = 0; l < 3; ++l)
          for (int c = 0; c < 3; ++c) {
            double e = eps3(a, b, c);
            if (e == 0.0) continue;
            tb.fc(sidx(a), ridx(b, l), ridx(c, l)) = e;
            tb.fc(ridx(b, l), sidx(a), ridx(c, l)) = -e;
          }
    // Casimirs: the entries of R^T R.
    for (int l = 0; l < 3; ++l)
      for (int m = l; m < 3; ++m) {
        Casimir c;
        c.name = "RtR_" + std::to_string(l + 1) + std::to_string(m + 1);
        c.kind = Casimir::Kind::Poly;
        for (int b = 0; b < 3; ++b) c.terms.push_back({1.0, {ridx(b, l), ridx(b, m)}});
        tb.casimirs.push_back(c);
      }
    return tb;
  }();
  return t;
}

// ---------------------------------------------------------------------------
// Spin-1 component pictures
// ---------------------------------------------------------------------------

namespace {

// Quadrupole entry functionals q_ab = tr(g qhat_ab); q_33 is dependent
// (trace-free), so the variable set carries 11, 22, 12, 13, 23.
void push_quad_vars(std::vector<VarDef>& vars, bool sector_g, const std::string& prefix) {
  auto quad = [&](int a, int b, const CMat& dual) {
    VarDef v;
    v.label = prefix + "_" + std::to_string(a + 1) + std::to_string(b + 1);
    CMat coef = spin1_quad_op(a, b);  // real symmetric, self-transpose
    (sector_g ? v.coef_g : v.coef_a) = coef;
    (sector_g ? v.dual_g : v.dual_a) = dual;
    vars.push_back(v);
  };
  CMat e11 = unit(3, 0, 0, 1.0), e22 = unit(3, 1, 1, 1.0), e33 = unit(3, 2, 2, 1.0);
  quad(0, 0, e11 - e33);
  quad(1, 1, e22 - e33);
  CMat d01 = unit(3, 0, 1, 1.0);
  d01.at(1, 0) = 1.0;
  quad(0, 1, d01);
  CMat d02 = unit(3, 0, 2, 1.0);
  d02.at(2, 0) = 1.0;
  quad(0, 2, d02);
  CMat d12 = unit(3, 1, 2, 1.0);
  d12.at(2, 1) = 1.0;
  quad(1, 2, d12);
}

// Symmetric entry functionals w_ab = (a_ab + a_ba)/2, all six independent.
void push_w_vars(std::vector<VarDef>& vars) {
  auto add = [&](int i, int j) {
    VarDef v;
    v.label = "w_" + std::to_string(i + 1) + std::to_string(j + 1);
    CMat coef(3);
    CMat dual(3);
    if (i == j) {
      coef.at(i, i) = 1.0;
      dual.at(i, i) = 1.0;
    } else {
      coef.at(i, j) = 0.5;
      coef.at(j, i) = 0.5;
      dual.at(i, j) = 1.0;
      dual.at(j, i) = 1.0;
    }
    v.coef_a = coef;
    v.dual_a = dual;
    vars.push_back(v);
  };
  add(0, 0);
  add(1, 1);
  add(2, 2);
  add(0, 1);
  add(0, 2);
  add(1, 2);
}

}  // namespace

const BracketTable& spin1_table() {
  static const BracketTable t = [] {
    std::vector<VarDef> vars;
    for (int a = 0; a < 3; ++a) vars.push_back(spin1_s_var(a, true));
    push_quad_vars(vars, true, "q");
    return derive_table("spin_quadrupole", 3, std::move(vars),
                        trace_power_casimirs(3, Casimir::Kind::TracePowerG, "g"));
  }();
  return t;
}

const BracketTable& spin1_ext_table() {
  static const BracketTable t = [] {
    std::vector<VarDef> vars;
    for (int a = 0; a < 3; ++a) vars.push_back(spin1_s_var(a, true));
    push_quad_vars(vars, true, "q");
    for (int a = 0; a < 3; ++a) vars.push_back(spin1_s_var(a, false));
    push_w_vars(vars);
    return derive_table("spin1_extended", 3, std::move(vars),
                        trace_power_casimirs(3, Casimir::Kind::TracePowerA, "a"));
  }();
  return t;
}

// ---------------------------------------------------------------------------
// Spin-3/2 vector/tensor picture over su(4)
// ---------------------------------------------------------------------------

const BracketTable& spin32_table() {
  static const BracketTable t = [] {
    std::vector<VarDef> vars;
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("s_") + kAxis[a];
      CMat coef(4);
      CMat dual(4);
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          double e = eps3(a, b, c);
          if (e == 0.0) continue;
          coef.at(b, c) = I * e;
          dual.at(b, c) = -0.5 * I * e;
        }
      v.coef_g = coef;
      v.dual_g = dual;
      vars.push_back(v);
    }
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("u_") + kAxis[a];
      CMat coef(4);
      coef.at(a, 3) = I;
      coef.at(3, a) = -I;
      CMat dual(4);
      dual.at(a, 3) = -0.5 * I;
      dual.at(3, a) = 0.5 * I;
      v.coef_g = coef;
      v.dual_g = dual;
      vars.push_back(v);
    }
    for (int a = 0; a < 3; ++a) {
      VarDef v;
      v.label = std::string("v_") + kAxis[a];
      CMat coef(4);
      coef.at(a, 3) = 1.0;
      coef.at(3, a) = 1.0;
      CMat dual(4);
      dual.at(a, 3) = 0.5;
      dual.at(3, a) = 0.5;
      v.coef_g = coef;
      v.dual_g = dual;
      vars.push_back(v);
    }
    {
      VarDef v;
      v.label = "g44";
      v.coef_g = unit(4, 3, 3, 1.0);
      CMat dual(4);
      dual.at(3, 3) = 1.0;
      for (int i = 0; i < 3; ++i) dual.at(i, i) = -1.0 / 3.0;
      v.dual_g = dual;
      vars.push_back(v);
    }
    // q_ab = (g_ab + g_ba)/2 - d_ab tr3(g)/3 over the 3x3 block; q_33 dependent.
    auto quad = [&](int a, int b) {
      VarDef v;
      v.label = "q_" + std::to_string(a + 1) + std::to_string(b + 1);
      CMat coef(4);
      CMat dual(4);
      if (a == b) {
        for (int i = 0; i < 3; ++i) coef.at(i, i) = (i == a ? 2.0 / 3.0 : -1.0 / 3.0);
        dual.at(a, a) = 1.0;
        dual.at(2, 2) = -1.0;
      } else {
        coef.at(a, b) = 0.5;
        coef.at(b, a) = 0.5;
        dual.at(a, b) = 1.0;
        dual.at(b, a) = 1.0;
      }
      v.coef_g = coef;
      v.dual_g = dual;
      vars.push_back(v);
    };
    quad(0, 0);
    quad(1, 1);
    quad(0, 1);
    quad(0, 2);
    quad(1, 2);
    return derive_table("spin32_vectors", 4, std::move(vars),
                        trace_power_casimirs(4, Casimir::Kind::TracePowerG, "g"),
                        /*allow_open=*/false, 1e-10, /*quotient_traceless=*/true);
  }();
  return t;
}

// ---------------------------------------------------------------------------
// Dirac and so(5) coefficient tables
// ---------------------------------------------------------------------------

namespace {
BracketTable make_basis_coeff_table(const std::string& name, const BasisSet& basis) {
  std::vector<VarDef> vars;
  for (int k = 0; k < basis.size(); ++k) {
    VarDef v;
    v.label = basis.labels[k];
    v.coef_g = basis.elems[k].transpose() * (1.0 / basis.gram_diag[k]);
    v.dual_g = basis.elems[k];
    vars.push_back(v);
  }
  return derive_table(name, basis.dim, std::move(vars),
                      trace_power_casimirs(basis.dim, Casimir::Kind::TracePowerG, "g"));
}
}  // namespace

const BracketTable& dirac_table() {
  static const BracketTable t = make_basis_coeff_table("dirac_components", dirac_basis());
  return t;
}

const BracketTable& so5_table() {
  static const BracketTable t = make_basis_coeff_table("so5_components", so5_basis());
  return t;
}

// ---------------------------------------------------------------------------
// Antisymmetric-part subalgebra (closed); restriction of the master table
// ---------------------------------------------------------------------------

const BracketTable& antisym_table(int dim) {
  static const BracketTable t3 = [] {
    std::vector<std::string> subset;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        subset.push_back("g_im_" + std::to_string(i + 1) + std::to_string(j + 1));
    SubalgebraResult r = project_subalgebra(master_table(3), subset);
    if (!r.closed) throw std::logic_error("antisym_table(3): expected closure");
    r.table.name = "antisym_su3";
    return r.table;
  }();
  static const BracketTable t4 = [] {
    std::vector<std::string> subset;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        subset.push_back("g_im_" + std::to_string(i + 1) + std::to_string(j + 1));
    SubalgebraResult r = project_subalgebra(master_table(4), subset);
    if (!r.closed) throw std::logic_error("antisym_table(4): expected closure");
    r.table.name = "antisym_su4";
    return r.table;
  }();
  switch (dim) {
    case 3: return t3;
    case 4: return t4;
    default: throw std::invalid_argument("antisym_table: dim must be 3 or 4");
  }
}

std::vector<const BracketTable*> all_shipped_tables() {
  return {&master_table(2),  &master_table(3),   &master_table(4), &extended_table(2),
          &extended_table(3), &extended_table(4), &pauli_coeff_table(), &uniaxial_table(),
          &rotor_table(),     &spin1_table(),     &spin1_ext_table(),   &spin32_table(),
          &dirac_table(),     &so5_table(),       &antisym_table(3),    &antisym_table(4)};
}

}  // namespace liemag
