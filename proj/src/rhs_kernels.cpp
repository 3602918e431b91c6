#include <stdexcept>

#include "liemag/rhs.hpp"

// OpenMP-parallel kernels. Each case precomputes the needed Laplacian fields
// and then runs an embarrassingly parallel per-site pass; no reductions, so
// results are bit-identical for any thread count.

namespace liemag {

namespace {
constexpr cplx kMinusI{0.0, -1.0};

inline void cross(const double a[3], const double b[3], double out[3]) {
  out[0] = a[1] * b[2] - a[2] * b[1];
  out[1] = a[2] * b[0] - a[0] * b[2];
  out[2] = a[0] * b[1] - a[1] * b[0];
}

inline RMat eps_hat(const double s[3]) {
  RMat m(3);
  m.at(0, 1) = 0.5 * s[2];
  m.at(1, 0) = -0.5 * s[2];
  m.at(1, 2) = 0.5 * s[0];
  m.at(2, 1) = -0.5 * s[0];
  m.at(2, 0) = 0.5 * s[1];
  m.at(0, 2) = -0.5 * s[1];
  return m;
}

inline void eps_hat_to_vec(const RMat& e, double s[3]) {
  s[0] = e.at(1, 2) - e.at(2, 1);
  s[1] = e.at(2, 0) - e.at(0, 2);
  s[2] = e.at(0, 1) - e.at(1, 0);
}

}  // namespace

namespace kernels {

void rhs_matrix_normal(Field& out, const Field& g, int d, double Jbar) {
  Field lap = laplacian(g);
  const int64_t ns = g.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t s = 0; s < ns; ++s) {
    CMat gm = load_cmat(g, d, s);
    CMat lm = load_cmat(lap, d, s);
    store_cmat(out, d, s, (kMinusI * Jbar) * commutator(gm, lm));
  }
}

void rhs_matrix_degenerate(Field& out_g, Field& out_a, const Field& g, const Field& a,
                           int d, double J, double Jbar, double B) {
  Field lap_g = laplacian(g);
  Field lap_a = laplacian(a);
  const int64_t ns = g.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t s = 0; s < ns; ++s) {
    CMat gm = load_cmat(g, d, s);
    CMat am = load_cmat(a, d, s);
    CMat lg = load_cmat(lap_g, d, s);
    CMat la = load_cmat(lap_a, d, s);
    CMat gdot = (kMinusI * Jbar) * commutator(gm, lg) + (kMinusI * B) * commutator(am, la);
    CMat w = gm * J - lg * Jbar;  // J g - Jbar lap g
    CMat adot = cplx(0.0, 1.0) * commutator(am, w);
    store_cmat(out_g, d, s, gdot);
    store_cmat(out_a, d, s, adot);
  }
}

void rhs_landau_lifshitz(Field& out, const Field& s, double Jbar) {
  Field lap = laplacian(s);
  const int64_t ns = s.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    double sv[3], lv[3], c[3];
    load_vec3(s, site, sv);
    load_vec3(lap, site, lv);
    cross(lv, sv, c);
    for (int k = 0; k < 3; ++k) c[k] *= -Jbar;
    store_vec3(out, site, c);
  }
}

void rhs_uniaxial(Field& out_s, Field& out_n, const Field& s, const Field& n, double J,
                  double B) {
  Field lap_n = laplacian(n);
  const int64_t ns = s.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    double sv[3], nv[3], ln[3], sdot[3], ndot[3];
    load_vec3(s, site, sv);
    load_vec3(n, site, nv);
    load_vec3(lap_n, site, ln);
    cross(ln, nv, sdot);
    for (int k = 0; k < 3; ++k) sdot[k] *= -B;
    cross(sv, nv, ndot);
    for (int k = 0; k < 3; ++k) ndot[k] *= J;
    store_vec3(out_s, site, sdot);
    store_vec3(out_n, site, ndot);
  }
}

void rhs_biaxial(Field& out_s, Field& out_r, const Field& s, const Field& r, double J,
                 double B) {
  Field lap_r = laplacian(r);
  const int64_t ns = s.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    double sv[3];
    load_vec3(s, site, sv);
    RMat rm = load_mat3(r, site);
    RMat lr = load_mat3(lap_r, site);
    // sdot = -B sum over columns of (lap R)_col x R_col
    double sdot[3] = {0.0, 0.0, 0.0};
    for (int col = 0; col < 3; ++col) {
      double a[3] = {lr.at(0, col), lr.at(1, col), lr.at(2, col)};
      double b[3] = {rm.at(0, col), rm.at(1, col), rm.at(2, col)};
      double c[3];
      cross(a, b, c);
      for (int k = 0; k < 3; ++k) sdot[k] -= B * c[k];
    }
    // Rdot columns: J s x R_col
    RMat rdot(3);
    for (int col = 0; col < 3; ++col) {
      double b[3] = {rm.at(0, col), rm.at(1, col), rm.at(2, col)};
      double c[3];
      cross(sv, b, c);
      for (int k = 0; k < 3; ++k) rdot.at(k, col) = J * c[k];
    }
    store_vec3(out_s, site, sdot);
    store_mat3(out_r, site, rdot);
  }
}

void rhs_su3_components(Field& out_s, Field& out_q, const Field& s, const Field& q,
                        double Jbar) {
  Field lap_s = laplacian(s);
  Field lap_q = laplacian(q);
  const int64_t ns = s.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    double sv[3], lsv[3];
    load_vec3(s, site, sv);
    load_vec3(lap_s, site, lsv);
    RMat qm = load_sym3(q, site);
    RMat lq = load_sym3(lap_q, site);
    RMat eh = eps_hat(sv);
    RMat leh = eps_hat(lsv);
    RMat qdot = (commutator(leh, qm) + commutator(lq, eh)) * Jbar;
    RMat ehdot = (commutator(qm, lq) + commutator(leh, eh)) * Jbar;
    double sdot[3];
    eps_hat_to_vec(ehdot, sdot);
    store_sym3(out_q, site, qdot);
    store_vec3(out_s, site, sdot);
  }
}

void rhs_nematic(Field& out_s, Field& out_w, const Field& s, const Field& w, double J,
                 double B) {
  Field lap_w = laplacian(w);
  const int64_t ns = s.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    double sv[3];
    load_vec3(s, site, sv);
    RMat wm = load_sym3(w, site);
    RMat lw = load_sym3(lap_w, site);
    // sdot_a = -2B eps_abg (lap w . w^T)_bg
    RMat m = lw * wm.transpose();
    double sdot[3] = {-2.0 * B * (m.at(1, 2) - m.at(2, 1)),
                      -2.0 * B * (m.at(2, 0) - m.at(0, 2)),
                      -2.0 * B * (m.at(0, 1) - m.at(1, 0))};
    // wdot_bg = -J s_a (eps_agr w_rb + eps_abr w_rg)
    RMat eh(3);
    eh.at(0, 1) = sv[2];
    eh.at(1, 0) = -sv[2];
    eh.at(1, 2) = sv[0];
    eh.at(2, 1) = -sv[0];
    eh.at(2, 0) = sv[1];
    eh.at(0, 2) = -sv[1];
    // s_a eps_agr = eh(g,r) pattern: wdot = -J (eh^T w^T + (eh^T w^T)^T) form
    RMat wdot(3);
    for (int b = 0; b < 3; ++b)
      for (int g = 0; g < 3; ++g) {
        double acc = 0.0;
        for (int r = 0; r < 3; ++r) acc += eh.at(g, r) * wm.at(r, b) + eh.at(b, r) * wm.at(r, g);
        wdot.at(b, g) = -J * acc;
      }
    store_vec3(out_s, site, sdot);
    store_sym3(out_w, site, wdot);
  }
}

void rhs_su2xsu2(Field& out_u, Field& out_s, const Field& u, const Field& s, double Jbar) {
  Field lap_u = laplacian(u);
  Field lap_s = laplacian(s);
  const int64_t ns = s.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    double uv[3], sv[3], lu[3], ls[3], c1[3], c2[3], udot[3], sdot[3];
    load_vec3(u, site, uv);
    load_vec3(s, site, sv);
    load_vec3(lap_u, site, lu);
    load_vec3(lap_s, site, ls);
    cross(ls, uv, c1);
    cross(lu, sv, c2);
    for (int k = 0; k < 3; ++k) udot[k] = -Jbar * (c1[k] + c2[k]);
    cross(lu, uv, c1);
    cross(ls, sv, c2);
    for (int k = 0; k < 3; ++k) sdot[k] = -Jbar * (c1[k] + c2[k]);
    store_vec3(out_u, site, udot);
    store_vec3(out_s, site, sdot);
  }
}

void rhs_so6(Field& out_g5, Field& out_g, Field& out_gb, Field& out_sg, const Field& g5,
             const Field& g, const Field& gb, const Field& sg, double Jbar) {
  Field l5 = laplacian(g5);
  Field lg = laplacian(g);
  Field lgb = laplacian(gb);
  Field lsg = laplacian(sg);
  const int64_t ns = g5.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    const double c5 = g5.at(0, site), lc5 = l5.at(0, site);
    double cg[4], clg[4], cgb[4], clgb[4];
    for (int m = 0; m < 4; ++m) {
      cg[m] = g.at(m, site);
      clg[m] = lg.at(m, site);
      cgb[m] = gb.at(m, site);
      clgb[m] = lgb.at(m, site);
    }
    RMat sig = load_asym(sg, 4, site);
    RMat lsig = load_asym(lsg, 4, site);

    double d5 = 0.0;
    for (int m = 0; m < 4; ++m) d5 += cgb[m] * clg[m] - cg[m] * clgb[m];
    out_g5.at(0, site) = 2.0 * Jbar * d5;

    for (int m = 0; m < 4; ++m) {
      double acc = c5 * clgb[m] - cgb[m] * lc5;
      for (int n = 0; n < 4; ++n) acc += sig.at(m, n) * clg[n] - cg[n] * lsig.at(m, n);
      out_g.at(m, site) = 2.0 * Jbar * acc;
    }
    for (int m = 0; m < 4; ++m) {
      double acc = cg[m] * lc5 - c5 * clg[m];
      for (int n = 0; n < 4; ++n) acc += cgb[n] * lsig.at(n, m) - sig.at(n, m) * clgb[n];
      out_gb.at(m, site) = 2.0 * Jbar * acc;
    }
    RMat sdot(4);
    for (int m = 0; m < 4; ++m)
      for (int n = m + 1; n < 4; ++n) {
        double acc = cg[n] * clg[m] - cg[m] * clg[n] + cgb[n] * clgb[m] - cgb[m] * clgb[n];
        for (int l = 0; l < 4; ++l)
          acc += sig.at(m, l) * lsig.at(l, n) - sig.at(l, n) * lsig.at(m, l);
        sdot.at(m, n) = 2.0 * Jbar * acc;
        sdot.at(n, m) = -sdot.at(m, n);
      }
    store_asym(out_sg, 4, site, sdot);
  }
}

void rhs_so4(Field& out, const Field& sg, double Jbar) {
  Field lap = laplacian(sg);
  const int64_t ns = sg.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    RMat s = load_asym(sg, 4, site);
    RMat l = load_asym(lap, 4, site);
    store_asym(out, 4, site, commutator(s, l) * (2.0 * Jbar));
  }
}

void rhs_so5(Field* out_a, Field& out_ab, const Field* ga, const Field& gab, double Jbar) {
  Field lab = laplacian(gab);
  Field la = ga ? laplacian(*ga) : Field();
  const int64_t ns = gab.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    RMat t = load_asym(gab, 5, site);
    RMat lt = load_asym(lab, 5, site);
    RMat tdot = commutator(lt, t) * (2.0 * Jbar);
    if (ga) {
      double v[5], lv[5];
      for (int a = 0; a < 5; ++a) {
        v[a] = ga->at(a, site);
        lv[a] = la.at(a, site);
      }
      // gamma_a dot = 2 Jbar (Gamma lap(v) - lap(Gamma) v)_a
      for (int a = 0; a < 5; ++a) {
        double acc = 0.0;
        for (int b = 0; b < 5; ++b) acc += t.at(a, b) * lv[b] - lt.at(a, b) * v[b];
        out_a->at(a, site) = 2.0 * Jbar * acc;
      }
      // tensor part gains (lap v tensor v - v tensor lap v)
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) tdot.at(a, b) += 2.0 * Jbar * (lv[a] * v[b] - v[a] * lv[b]);
    }
    store_asym(out_ab, 5, site, tdot);
  }
}

void rhs_antisym(Field& out, const Field& ga, int dim, double Jbar) {
  Field lap = laplacian(ga);
  const int64_t ns = ga.nsites();
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t site = 0; site < ns; ++site) {
    RMat m = load_asym(ga, dim, site);
    RMat l = load_asym(lap, dim, site);
    store_asym(out, dim, site, commutator(m, l) * Jbar);
  }
}

}  // namespace kernels

namespace ref {
void dispatch(SimState& rate, const Model& m, const SimState& st);
Field antisym(const Field& ga, int dim, double Jbar);
}  // namespace ref

void compute_rhs_into(SimState& rate, const Model& m, const SimState& st, RhsImpl impl) {
  if (impl == RhsImpl::Serial) {
    ref::dispatch(rate, m, st);
    return;
  }
  const int d = m.dim();
  switch (m.case_id) {
    case CaseId::NormalSuN:
      kernels::rhs_matrix_normal(rate.field(FieldId::G), st.field(FieldId::G), d, m.Jbar);
      break;
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken:
      kernels::rhs_matrix_degenerate(rate.field(FieldId::G), rate.field(FieldId::Aord),
                                     st.field(FieldId::G), st.field(FieldId::Aord), d, m.J,
                                     m.Jbar, m.B);
      break;
    case CaseId::LlHeisenberg:
      kernels::rhs_landau_lifshitz(rate.field(FieldId::S), st.field(FieldId::S), m.Jbar);
      break;
    case CaseId::Uniaxial:
      kernels::rhs_uniaxial(rate.field(FieldId::S), rate.field(FieldId::N),
                            st.field(FieldId::S), st.field(FieldId::N), m.J, m.B);
      break;
    case CaseId::Biaxial:
      kernels::rhs_biaxial(rate.field(FieldId::S), rate.field(FieldId::Rmat),
                           st.field(FieldId::S), st.field(FieldId::Rmat), m.J, m.B);
      break;
    case CaseId::Su3Normal:
      kernels::rhs_su3_components(rate.field(FieldId::S), rate.field(FieldId::Q),
                                  st.field(FieldId::S), st.field(FieldId::Q), m.Jbar);
      break;
    case CaseId::Nematic:
      kernels::rhs_nematic(rate.field(FieldId::S), rate.field(FieldId::W),
                           st.field(FieldId::S), st.field(FieldId::W), m.J, m.B);
      break;
    case CaseId::Su2xSu2:
      kernels::rhs_su2xsu2(rate.field(FieldId::U), rate.field(FieldId::S),
                           st.field(FieldId::U), st.field(FieldId::S), m.Jbar);
      break;
    case CaseId::So6:
      kernels::rhs_so6(rate.field(FieldId::Gamma5), rate.field(FieldId::Gamma),
                       rate.field(FieldId::Gbar), rate.field(FieldId::Sigma),
                       st.field(FieldId::Gamma5), st.field(FieldId::Gamma),
                       st.field(FieldId::Gbar), st.field(FieldId::Sigma), m.Jbar);
      break;
    case CaseId::So4:
      kernels::rhs_so4(rate.field(FieldId::Sigma), st.field(FieldId::Sigma), m.Jbar);
      break;
    case CaseId::So5Full:
      kernels::rhs_so5(&rate.field(FieldId::GammaA), rate.field(FieldId::GammaAb),
                       &st.field(FieldId::GammaA), st.field(FieldId::GammaAb), m.Jbar);
      break;
    case CaseId::So5Tensor:
      kernels::rhs_so5(nullptr, rate.field(FieldId::GammaAb), nullptr,
                       st.field(FieldId::GammaAb), m.Jbar);
      break;
  }
}

SimState compute_rhs(const Model& m, const SimState& st, RhsImpl impl) {
  SimState rate = make_state(m, st.grid);
  rate.time = st.time;
  rate.step = st.step;
  compute_rhs_into(rate, m, st, impl);
  return rate;
}

Field antisym_rhs(const Field& ga, int dim, double Jbar, RhsImpl impl) {
  if (dim < 3) throw std::invalid_argument("antisym_rhs: dim must be >= 3");
  if (impl == RhsImpl::Serial) return ref::antisym(ga, dim, Jbar);
  Field out = Field::zeros_like(ga);
  kernels::rhs_antisym(out, ga, dim, Jbar);
  return out;
}

}  // namespace liemag
