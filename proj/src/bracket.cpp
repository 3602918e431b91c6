#include "liemag/bracket.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace liemag {

namespace {

constexpr cplx I{0.0, 1.0};

// Real coordinates of a Hermitian matrix: diagonal, then Re/Im of the upper
// triangle. Faithful: two Hermitian matrices are equal iff their coords are.
void append_herm_coords(const CMat& c, int dim, std::vector<double>& out,
                        bool quotient) {
  if (c.dim() == 0) {
    out.insert(out.end(), static_cast<size_t>(dim) * dim, 0.0);
    return;
  }
  double shift = quotient ? c.trace().real() / dim : 0.0;
  for (int i = 0; i < dim; ++i) out.push_back(c.at(i, i).real() - shift);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      out.push_back(c.at(i, j).real());
      out.push_back(c.at(i, j).imag());
    }
}

std::vector<double> functional_coords(const VarDef& v, int dim, bool quotient) {
  std::vector<double> out;
  out.reserve(2 * static_cast<size_t>(dim) * dim);
  append_herm_coords(v.coef_g, dim, out, quotient);
  append_herm_coords(v.coef_a, dim, out, quotient);
  return out;
}

void check_functional(const VarDef& v, int dim) {
  const double tol = 1e-12;
  for (const CMat* m : {&v.coef_g, &v.coef_a}) {
    if (m->dim() == 0) continue;
    if (m->dim() != dim)
      throw std::invalid_argument("VarDef " + v.label + ": coefficient dim mismatch");
    if (m->herm_defect() > tol)
      throw std::invalid_argument("VarDef " + v.label +
                                  ": coefficient matrix must be Hermitian");
  }
}

// Solve min ||M x - b||_2 by normal equations with partial pivoting.
// M is m x n (columns = variables), small (n <= 40).
std::vector<double> least_squares(const std::vector<std::vector<double>>& cols,
                                  const std::vector<double>& b) {
  const int n = static_cast<int>(cols.size());
  const int m = static_cast<int>(b.size());
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < m; ++k) s += cols[i][k] * cols[j][k];
      a[static_cast<size_t>(i) * n + j] = s;
      a[static_cast<size_t>(j) * n + i] = s;
    }
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += cols[i][k] * b[k];
    rhs[i] = s;
  }
  // Gaussian elimination, partial pivoting.
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int col = 0; col < n; ++col) {
    int best = col;
    double mag = std::abs(a[static_cast<size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[static_cast<size_t>(r) * n + col]);
      if (v > mag) {
        mag = v;
        best = r;
      }
    }
    if (mag < 1e-14)
      throw std::runtime_error("least_squares: variable set is linearly dependent");
    if (best != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(best) * n + j], a[static_cast<size_t>(col) * n + j]);
      std::swap(rhs[best], rhs[col]);
    }
    const double d = a[static_cast<size_t>(col) * n + col];
    for (int r = col + 1; r < n; ++r) {
      double fac = a[static_cast<size_t>(r) * n + col] / d;
      if (fac == 0.0) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<size_t>(r) * n + j] -= fac * a[static_cast<size_t>(col) * n + j];
      rhs[r] -= fac * rhs[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int j = r + 1; j < n; ++j) s -= a[static_cast<size_t>(r) * n + j] * x[j];
    x[r] = s / a[static_cast<size_t>(r) * n + r];
  }
  return x;
}

}  // namespace

int BracketTable::index_of(const std::string& label) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].label == label) return static_cast<int>(i);
  return -1;
}

std::vector<double> BracketTable::bracket_combo(const std::vector<double>& a,
                                                const std::vector<double>& b) const {
  const int n = nv();
  std::vector<double> r(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0.0) continue;
      const double w = a[i] * b[j];
      for (int c = 0; c < n; ++c) r[c] += w * fc(i, j, c);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Master bracket of two linear functionals.
//
// For v = <C1,g> + <D1,a> and w = <C2,g> + <D2,a> (with <C,g> = sum C_ab g_ab)
// the master brackets give
//   {v, w} = -i <[C2,C1], g>  - i <[D2,C1] + [C2,D1], a>.
// ---------------------------------------------------------------------------

FunctionalPair master_bracket(const VarDef& v, const VarDef& w, int dim) {
  auto mat_or_zero = [dim](const CMat& m) { return m.dim() == 0 ? CMat(dim) : m; };
  const CMat c1 = mat_or_zero(v.coef_g);
  const CMat d1 = mat_or_zero(v.coef_a);
  const CMat c2 = mat_or_zero(w.coef_g);
  const CMat d2 = mat_or_zero(w.coef_a);

  FunctionalPair out;
  out.cg = (-I) * commutator(c2, c1);
  out.ca = (-I) * (commutator(d2, c1) + commutator(c2, d1));
  return out;
}

// ---------------------------------------------------------------------------
// Table derivation
// ---------------------------------------------------------------------------

BracketTable derive_table(const std::string& name, int dim, std::vector<VarDef> vars,
                          std::vector<Casimir> casimirs, bool allow_open,
                          double closure_tol, bool quotient_traceless) {
  for (const VarDef& v : vars) check_functional(v, dim);

  BracketTable t;
  t.name = name;
  t.dim = dim;
  t.vars = std::move(vars);
  t.casimirs = std::move(casimirs);
  const int n = t.nv();
  t.f.assign(static_cast<size_t>(n) * n * n, 0.0);

  std::vector<std::vector<double>> cols(n);
  for (int k = 0; k < n; ++k) cols[k] = functional_coords(t.vars[k], dim, quotient_traceless);
  const int m = static_cast<int>(cols[0].size());

  double worst = 0.0;
  std::string worst_pair;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b) {
      FunctionalPair w = master_bracket(t.vars[a], t.vars[b], dim);
      if (w.cg.herm_defect() > 1e-12 || w.ca.herm_defect() > 1e-12)
        throw std::logic_error("derive_table: bracket of real functionals not real");
      VarDef tmp{"", w.cg, w.ca, CMat(), CMat()};
      std::vector<double> rhs = functional_coords(tmp, dim, quotient_traceless);
      std::vector<double> lam = least_squares(cols, rhs);
      double res = 0.0;
      for (int i = 0; i < m; ++i) {
        double r = rhs[i];
        for (int k = 0; k < n; ++k) r -= cols[k][i] * lam[k];
        res = std::max(res, std::abs(r));
      }
      if (res > worst) {
        worst = res;
        worst_pair = t.vars[a].label + "," + t.vars[b].label;
      }
      for (int c = 0; c < n; ++c) {
        t.fc(a, b, c) = lam[c];
        t.fc(b, a, c) = -lam[c];
      }
    }
  t.derivation_residual = worst;
  if (!allow_open && worst > closure_tol)
    throw std::runtime_error("derive_table(" + name + "): variable set does not close, {" +
                             worst_pair + "} leaks " + std::to_string(worst));
  return t;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

double antisymmetry_residual(const BracketTable& t) {
  const int n = t.nv();
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) r = std::max(r, std::abs(t.fc(a, b, c) + t.fc(b, a, c)));
  return r;
}

double jacobi_residual(const BracketTable& t) {
  const int n = t.nv();
  double r = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          double s = 0.0;
          for (int d = 0; d < n; ++d)
            s += t.fc(a, b, d) * t.fc(d, c, e) + t.fc(b, c, d) * t.fc(d, a, e) +
                 t.fc(c, a, d) * t.fc(d, b, e);
          r = std::max(r, std::abs(s));
        }
  return r;
}

namespace {

// dC/dv for a Casimir at variable values `vals`.
std::vector<double> casimir_gradient(const BracketTable& t, const Casimir& c,
                                     const std::vector<double>& vals) {
  const int n = t.nv();
  std::vector<double> g(n, 0.0);
  if (c.kind == Casimir::Kind::Poly) {
    for (const Casimir::Term& term : c.terms) {
      for (size_t k = 0; k < term.vars.size(); ++k) {
        double p = term.coef;
        for (size_t l = 0; l < term.vars.size(); ++l) {
          if (l == k) continue;
          p *= vals[term.vars[l]];
        }
        g[term.vars[k]] += p;
      }
    }
    return g;
  }
  const bool sector_g = (c.kind == Casimir::Kind::TracePowerG);
  CMat acc(t.dim);
  bool any = false;
  for (int k = 0; k < n; ++k) {
    const CMat& dual = sector_g ? t.vars[k].dual_g : t.vars[k].dual_a;
    if (dual.dim() == 0) continue;
    acc += dual * vals[k];
    any = true;
  }
  if (!any) throw std::logic_error("casimir_gradient: table has no duals for trace power");
  CMat p = CMat::identity(t.dim);
  for (int k = 0; k < c.power - 1; ++k) p = p * acc;
  for (int k = 0; k < n; ++k) {
    const CMat& dual = sector_g ? t.vars[k].dual_g : t.vars[k].dual_a;
    if (dual.dim() == 0) continue;
    g[k] = c.power * (p * dual).trace().real();
  }
  return g;
}

}  // namespace

double casimir_commutation_residual(const BracketTable& t, const Casimir& c, int trials,
                                    Rng& rng) {
  const int n = t.nv();
  double worst = 0.0;
  std::vector<double> vals(n);
  for (int trial = 0; trial < trials; ++trial) {
    for (int k = 0; k < n; ++k) vals[k] = rng.uniform(-1.0, 1.0);
    std::vector<double> grad = casimir_gradient(t, c, vals);
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int a = 0; a < n; ++a) {
        if (grad[a] == 0.0) continue;
        for (int cc = 0; cc < n; ++cc) s += grad[a] * t.fc(a, b, cc) * vals[cc];
      }
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

double canonical_consistency_check(int dim, int trials, Rng& rng) {
  auto random_herm = [&rng, dim]() {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) {
      m.at(i, i) = rng.uniform(-1.0, 1.0);
      for (int j = i + 1; j < dim; ++j) {
        cplx v(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        m.at(i, j) = v;
        m.at(j, i) = std::conj(v);
      }
    }
    return m;
  };

  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    CMat a = random_herm();
    CMat b = random_herm();
    CMat g = I * commutator(b, a);

    // {g_ab, g_cd} through the canonical pair algebra:
    //   dg_ab/da_mn dg_cd/db_nm - dg_cd/da_mn dg_ab/db_nm
    // with dg_ab/da_mn = i(b_am d_bn - d_am b_nb),
    //      dg_ab/db_mn = i(d_am a_nb - a_am d_bn).
    for (int ia = 0; ia < dim; ++ia)
      for (int ib = 0; ib < dim; ++ib)
        for (int ic = 0; ic < dim; ++ic)
          for (int id = 0; id < dim; ++id) {
            cplx acc = 0.0;
            for (int m = 0; m < dim; ++m)
              for (int n = 0; n < dim; ++n) {
                cplx dg1_da = I * (b.at(ia, m) * double(ib == n) -
                                   double(ia == m) * b.at(n, ib));
                cplx dg2_db = I * (double(ic == n) * a.at(m, id) - a.at(ic, n) * double(id == m));
                cplx dg2_da = I * (b.at(ic, m) * double(id == n) - double(ic == m) * b.at(n, id));
                cplx dg1_db = I * (double(ia == n) * a.at(m, ib) - a.at(ia, n) * double(ib == m));
                acc += dg1_da * dg2_db - dg2_da * dg1_db;
              }
            // Master right-hand side: {g_ab, g_cd} = -i (g_cb d_ad - g_ad d_cb).
            cplx expect = -I * (g.at(ic, ib) * double(ia == id) - g.at(ia, id) * double(ic == ib));
            worst = std::max(worst, std::abs(acc - expect));
          }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Subalgebra restriction
// ---------------------------------------------------------------------------

SubalgebraResult project_subalgebra(const BracketTable& parent,
                                    const std::vector<std::string>& subset) {
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (const std::string& label : subset) {
    int k = parent.index_of(label);
    if (k < 0) throw std::invalid_argument("project_subalgebra: unknown label " + label);
    idx.push_back(k);
  }
  const int n = static_cast<int>(idx.size());
  std::vector<bool> in_subset(parent.nv(), false);
  for (int k : idx) in_subset[k] = true;

  SubalgebraResult out;
  out.table.name = parent.name + ":subset";
  out.table.dim = parent.dim;
  for (int k : idx) out.table.vars.push_back(parent.vars[k]);
  out.table.f.assign(static_cast<size_t>(n) * n * n, 0.0);
  out.leak = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) out.table.fc(a, b, c) = parent.fc(idx[a], idx[b], idx[c]);
      for (int c = 0; c < parent.nv(); ++c) {
        if (in_subset[c]) continue;
        double v = std::abs(parent.fc(idx[a], idx[b], c));
        if (v > 1e-10) {
          out.offenders.push_back("{" + parent.vars[idx[a]].label + "," +
                                  parent.vars[idx[b]].label + "} -> " + parent.vars[c].label);
        }
        out.leak = std::max(out.leak, v);
      }
    }
  out.closed = out.leak <= 1e-10;
  // Casimirs restricted to ones whose variables survive.
  for (const Casimir& c : parent.casimirs) {
    if (c.kind != Casimir::Kind::Poly) continue;
    bool ok = true;
    Casimir rc = c;
    for (Casimir::Term& term : rc.terms)
      for (int& v : term.vars) {
        auto it = std::find(idx.begin(), idx.end(), v);
        if (it == idx.end()) {
          ok = false;
          break;
        }
        v = static_cast<int>(it - idx.begin());
      }
    if (ok) out.table.casimirs.push_back(rc);
  }
  return out;
}

SubalgebraResult project_subalgebra(const BracketTable& master, const BasisSet& basis,
                                    const std::vector<std::string>& subset) {
  if (master.dim != basis.dim)
    throw std::invalid_argument("project_subalgebra: master/basis dimension mismatch");
  std::vector<VarDef> vars;
  for (int k = 0; k < basis.size(); ++k) {
    VarDef v;
    v.label = basis.labels[k];
    v.coef_g = basis.elems[k].transpose() * (1.0 / basis.gram_diag[k]);
    v.dual_g = basis.elems[k];
    vars.push_back(v);
  }
  BracketTable t = derive_table(master.name + ":" + basis.name, basis.dim, std::move(vars),
                                {}, /*allow_open=*/true);
  return project_subalgebra(t, subset);
}

// ---------------------------------------------------------------------------
// JSON export
// ---------------------------------------------------------------------------

std::string table_to_json(const BracketTable& t) {
  nlohmann::json j;
  j["name"] = t.name;
  j["dim"] = t.dim;
  nlohmann::json labels = nlohmann::json::array();
  for (const VarDef& v : t.vars) labels.push_back(v.label);
  j["labels"] = labels;
  nlohmann::json trips = nlohmann::json::array();
  const int n = t.nv();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double v = t.fc(a, b, c);
        if (std::abs(v) > 1e-13) trips.push_back({a, b, c, v});
      }
  j["f_abc"] = trips;
  nlohmann::json cas = nlohmann::json::array();
  for (const Casimir& c : t.casimirs) {
    nlohmann::json jc;
    jc["name"] = c.name;
    switch (c.kind) {
      case Casimir::Kind::Poly: {
        jc["kind"] = "poly";
        nlohmann::json terms = nlohmann::json::array();
        for (const Casimir::Term& term : c.terms) terms.push_back({term.coef, term.vars});
        jc["terms"] = terms;
        break;
      }
      case Casimir::Kind::TracePowerG:
        jc["kind"] = "trace_power_g";
        jc["power"] = c.power;
        break;
      case Casimir::Kind::TracePowerA:
        jc["kind"] = "trace_power_a";
        jc["power"] = c.power;
        break;
    }
    cas.push_back(jc);
  }
  j["casimirs"] = cas;
  j["derivation_residual"] = t.derivation_residual;
  return j.dump(2);
}

std::string relation_report_text(const std::vector<RelationCheck>& checks) {
  std::ostringstream os;
  for (const RelationCheck& c : checks) {
    const char* s = c.status == RelationCheck::Status::Match ? "MATCH"
                    : c.status == RelationCheck::Status::Mismatch ? "MISMATCH"
                                                                  : "FLAGGED";
    os << s << "  " << c.table << " :: " << c.relation << "  max_diff=" << c.max_diff;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace liemag
