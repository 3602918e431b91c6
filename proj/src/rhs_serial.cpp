#include "liemag/rhs.hpp"

// Serial reference path: straightforward per-site evaluation with its own
// neighbor arithmetic, kept independent of the parallel kernels so the two
// can be checked against each other (and raced in the benchmark tool).

namespace liemag {
namespace ref {

namespace {

// 3-point Laplacian of component c at site s, inline neighbor lookups.
double lap_at(const Field& f, int c, int64_t s) {
  const Grid& g = f.grid();
  double acc = 0.0;
  for (int axis = 0; axis < g.rank; ++axis) {
    int64_t p = g.neighbor(s, axis, +1);
    int64_t m = g.neighbor(s, axis, -1);
    acc += (f.at(c, p) - 2.0 * f.at(c, s) + f.at(c, m)) / (g.h[axis] * g.h[axis]);
  }
  return acc;
}

CMat lap_cmat(const Field& f, int d, int64_t s) {
  CMat out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out.at(i, j) = cplx(lap_at(f, cm_re(d, i, j), s), lap_at(f, cm_im(d, i, j), s));
  return out;
}

void lap_vec3(const Field& f, int64_t s, double out[3]) {
  for (int c = 0; c < 3; ++c) out[c] = lap_at(f, c, s);
}

RMat lap_sym3(const Field& f, int64_t s) {
  RMat m(3);
  m.at(0, 0) = lap_at(f, 0, s);
  m.at(1, 1) = lap_at(f, 1, s);
  m.at(2, 2) = lap_at(f, 2, s);
  m.at(0, 1) = m.at(1, 0) = lap_at(f, 3, s);
  m.at(0, 2) = m.at(2, 0) = lap_at(f, 4, s);
  m.at(1, 2) = m.at(2, 1) = lap_at(f, 5, s);
  return m;
}

RMat lap_asym(const Field& f, int n, int64_t s) {
  RMat m(n);
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++c) {
      double v = lap_at(f, c, s);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

double eps(int a, int b, int c) {
  return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
}

}  // namespace

Field antisym(const Field& ga, int dim, double Jbar) {
  Field out = Field::zeros_like(ga);
  for (int64_t s = 0; s < ga.nsites(); ++s) {
    RMat m = load_asym(ga, dim, s);
    RMat l = lap_asym(ga, dim, s);
    store_asym(out, dim, s, (m * l - l * m) * Jbar);
  }
  return out;
}

void dispatch(SimState& rate, const Model& m, const SimState& st) {
  const int d = m.dim();
  const int64_t ns = st.grid.nsites();
  switch (m.case_id) {
    case CaseId::NormalSuN: {
      const Field& g = st.field(FieldId::G);
      Field& out = rate.field(FieldId::G);
      for (int64_t s = 0; s < ns; ++s) {
        CMat gm = load_cmat(g, d, s);
        CMat lm = lap_cmat(g, d, s);
        store_cmat(out, d, s, cplx(0.0, -m.Jbar) * (gm * lm - lm * gm));
      }
      break;
    }
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken: {
      const Field& g = st.field(FieldId::G);
      const Field& a = st.field(FieldId::Aord);
      Field& og = rate.field(FieldId::G);
      Field& oa = rate.field(FieldId::Aord);
      for (int64_t s = 0; s < ns; ++s) {
        CMat gm = load_cmat(g, d, s);
        CMat am = load_cmat(a, d, s);
        CMat lg = lap_cmat(g, d, s);
        CMat la = lap_cmat(a, d, s);
        store_cmat(og, d, s,
                   cplx(0.0, -m.Jbar) * (gm * lg - lg * gm) +
                       cplx(0.0, -m.B) * (am * la - la * am));
        CMat w = gm * m.J - lg * m.Jbar;
        store_cmat(oa, d, s, cplx(0.0, 1.0) * (am * w - w * am));
      }
      break;
    }
    case CaseId::LlHeisenberg: {
      const Field& s = st.field(FieldId::S);
      Field& out = rate.field(FieldId::S);
      for (int64_t site = 0; site < ns; ++site) {
        double sv[3], lv[3];
        load_vec3(s, site, sv);
        lap_vec3(s, site, lv);
        for (int a = 0; a < 3; ++a) {
          double acc = 0.0;
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) acc += eps(a, b, c) * lv[b] * sv[c];
          out.at(a, site) = -m.Jbar * acc;
        }
      }
      break;
    }
    case CaseId::Uniaxial: {
      const Field& s = st.field(FieldId::S);
      const Field& n = st.field(FieldId::N);
      Field& os = rate.field(FieldId::S);
      Field& on = rate.field(FieldId::N);
      for (int64_t site = 0; site < ns; ++site) {
        double sv[3], nv[3], ln[3];
        load_vec3(s, site, sv);
        load_vec3(n, site, nv);
        lap_vec3(n, site, ln);
        for (int a = 0; a < 3; ++a) {
          double accs = 0.0, accn = 0.0;
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
              accs += eps(a, b, c) * ln[b] * nv[c];
              accn += eps(a, b, c) * sv[b] * nv[c];
            }
          os.at(a, site) = -m.B * accs;
          on.at(a, site) = m.J * accn;
        }
      }
      break;
    }
    case CaseId::Biaxial: {
      const Field& s = st.field(FieldId::S);
      const Field& r = st.field(FieldId::Rmat);
      Field& os = rate.field(FieldId::S);
      Field& orr = rate.field(FieldId::Rmat);
      for (int64_t site = 0; site < ns; ++site) {
        double sv[3];
        load_vec3(s, site, sv);
        RMat rm = load_mat3(r, site);
        RMat lr(3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) lr.at(i, j) = lap_at(r, 3 * i + j, site);
        for (int a = 0; a < 3; ++a) {
          double acc = 0.0;
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
              for (int l = 0; l < 3; ++l) acc += eps(a, b, c) * lr.at(b, l) * rm.at(c, l);
          os.at(a, site) = -m.B * acc;
        }
        RMat rd(3);
        for (int b = 0; b < 3; ++b)
          for (int l = 0; l < 3; ++l) {
            double acc = 0.0;
            for (int g = 0; g < 3; ++g)
              for (int rho = 0; rho < 3; ++rho)
                acc += eps(b, g, rho) * sv[g] * rm.at(rho, l);
            rd.at(b, l) = m.J * acc;
          }
        store_mat3(orr, site, rd);
      }
      break;
    }
    case CaseId::Su3Normal: {
      const Field& s = st.field(FieldId::S);
      const Field& q = st.field(FieldId::Q);
      Field& os = rate.field(FieldId::S);
      Field& oq = rate.field(FieldId::Q);
      for (int64_t site = 0; site < ns; ++site) {
        double sv[3], ls[3];
        load_vec3(s, site, sv);
        lap_vec3(s, site, ls);
        RMat qm = load_sym3(q, site);
        RMat lq = lap_sym3(q, site);
        RMat eh(3), leh(3);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            double v1 = 0.0, v2 = 0.0;
            for (int g = 0; g < 3; ++g) {
              v1 += eps(a, b, g) * sv[g];
              v2 += eps(a, b, g) * ls[g];
            }
            eh.at(a, b) = 0.5 * v1;
            leh.at(a, b) = 0.5 * v2;
          }
        RMat qd = (leh * qm - qm * leh + lq * eh - eh * lq) * m.Jbar;
        RMat ed = (qm * lq - lq * qm + leh * eh - eh * leh) * m.Jbar;
        double sd[3];
        for (int g = 0; g < 3; ++g) {
          double acc = 0.0;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) acc += eps(g, a, b) * ed.at(a, b);
          sd[g] = acc;
        }
        store_vec3(os, site, sd);
        store_sym3(oq, site, qd);
      }
      break;
    }
    case CaseId::Nematic: {
      const Field& s = st.field(FieldId::S);
      const Field& w = st.field(FieldId::W);
      Field& os = rate.field(FieldId::S);
      Field& ow = rate.field(FieldId::W);
      for (int64_t site = 0; site < ns; ++site) {
        double sv[3];
        load_vec3(s, site, sv);
        RMat wm = load_sym3(w, site);
        RMat lw = lap_sym3(w, site);
        for (int a = 0; a < 3; ++a) {
          double acc = 0.0;
          for (int b = 0; b < 3; ++b)
            for (int g = 0; g < 3; ++g)
              for (int l = 0; l < 3; ++l) acc += eps(a, b, g) * lw.at(b, l) * wm.at(g, l);
          os.at(a, site) = -2.0 * m.B * acc;
        }
        RMat wd(3);
        for (int b = 0; b < 3; ++b)
          for (int g = 0; g < 3; ++g) {
            double acc = 0.0;
            for (int a = 0; a < 3; ++a)
              for (int rho = 0; rho < 3; ++rho)
                acc += sv[a] * (eps(a, g, rho) * wm.at(rho, b) + eps(a, b, rho) * wm.at(rho, g));
            wd.at(b, g) = -m.J * acc;
          }
        store_sym3(ow, site, wd);
      }
      break;
    }
    case CaseId::Su2xSu2: {
      const Field& u = st.field(FieldId::U);
      const Field& s = st.field(FieldId::S);
      Field& ou = rate.field(FieldId::U);
      Field& os = rate.field(FieldId::S);
      for (int64_t site = 0; site < ns; ++site) {
        double uv[3], sv[3], lu[3], ls[3];
        load_vec3(u, site, uv);
        load_vec3(s, site, sv);
        lap_vec3(u, site, lu);
        lap_vec3(s, site, ls);
        for (int a = 0; a < 3; ++a) {
          double au = 0.0, as = 0.0;
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
              au += eps(a, b, c) * (ls[b] * uv[c] + lu[b] * sv[c]);
              as += eps(a, b, c) * (lu[b] * uv[c] + ls[b] * sv[c]);
            }
          ou.at(a, site) = -m.Jbar * au;
          os.at(a, site) = -m.Jbar * as;
        }
      }
      break;
    }
    case CaseId::So6: {
      const Field& g5 = st.field(FieldId::Gamma5);
      const Field& g = st.field(FieldId::Gamma);
      const Field& gb = st.field(FieldId::Gbar);
      const Field& sg = st.field(FieldId::Sigma);
      Field& o5 = rate.field(FieldId::Gamma5);
      Field& og = rate.field(FieldId::Gamma);
      Field& ob = rate.field(FieldId::Gbar);
      Field& osg = rate.field(FieldId::Sigma);
      for (int64_t site = 0; site < ns; ++site) {
        double c5 = g5.at(0, site), lc5 = lap_at(g5, 0, site);
        double cg[4], clg[4], cb[4], clb[4];
        for (int mu = 0; mu < 4; ++mu) {
          cg[mu] = g.at(mu, site);
          clg[mu] = lap_at(g, mu, site);
          cb[mu] = gb.at(mu, site);
          clb[mu] = lap_at(gb, mu, site);
        }
        RMat sig = load_asym(sg, 4, site);
        RMat lsig = lap_asym(sg, 4, site);
        double d5 = 0.0;
        for (int mu = 0; mu < 4; ++mu) d5 += cb[mu] * clg[mu] - cg[mu] * clb[mu];
        o5.at(0, site) = 2.0 * m.Jbar * d5;
        for (int mu = 0; mu < 4; ++mu) {
          double acc = c5 * clb[mu] - cb[mu] * lc5;
          for (int nu = 0; nu < 4; ++nu)
            acc += sig.at(mu, nu) * clg[nu] - cg[nu] * lsig.at(mu, nu);
          og.at(mu, site) = 2.0 * m.Jbar * acc;
        }
        for (int mu = 0; mu < 4; ++mu) {
          double acc = cg[mu] * lc5 - c5 * clg[mu];
          for (int nu = 0; nu < 4; ++nu)
            acc += cb[nu] * lsig.at(nu, mu) - sig.at(nu, mu) * clb[nu];
          ob.at(mu, site) = 2.0 * m.Jbar * acc;
        }
        RMat sd(4);
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = mu + 1; nu < 4; ++nu) {
            double acc = cg[nu] * clg[mu] - cg[mu] * clg[nu] + cb[nu] * clb[mu] -
                         cb[mu] * clb[nu];
            for (int l = 0; l < 4; ++l)
              acc += sig.at(mu, l) * lsig.at(l, nu) - sig.at(l, nu) * lsig.at(mu, l);
            sd.at(mu, nu) = 2.0 * m.Jbar * acc;
            sd.at(nu, mu) = -sd.at(mu, nu);
          }
        store_asym(osg, 4, site, sd);
      }
      break;
    }
    case CaseId::So4: {
      const Field& sg = st.field(FieldId::Sigma);
      Field& out = rate.field(FieldId::Sigma);
      for (int64_t site = 0; site < ns; ++site) {
        RMat s = load_asym(sg, 4, site);
        RMat l = lap_asym(sg, 4, site);
        store_asym(out, 4, site, (s * l - l * s) * (2.0 * m.Jbar));
      }
      break;
    }
    case CaseId::So5Full:
    case CaseId::So5Tensor: {
      const bool full = m.case_id == CaseId::So5Full;
      const Field& gab = st.field(FieldId::GammaAb);
      Field& oab = rate.field(FieldId::GammaAb);
      for (int64_t site = 0; site < ns; ++site) {
        RMat t = load_asym(gab, 5, site);
        RMat lt = lap_asym(gab, 5, site);
        RMat td = (lt * t - t * lt) * (2.0 * m.Jbar);
        if (full) {
          const Field& ga = st.field(FieldId::GammaA);
          double v[5], lv[5];
          for (int a = 0; a < 5; ++a) {
            v[a] = ga.at(a, site);
            lv[a] = lap_at(ga, a, site);
          }
          Field& oa = rate.field(FieldId::GammaA);
          for (int a = 0; a < 5; ++a) {
            double acc = 0.0;
            for (int b = 0; b < 5; ++b) acc += t.at(a, b) * lv[b] - lt.at(a, b) * v[b];
            oa.at(a, site) = 2.0 * m.Jbar * acc;
          }
          for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
              td.at(a, b) += 2.0 * m.Jbar * (lv[a] * v[b] - v[a] * lv[b]);
        }
        store_asym(oab, 5, site, td);
      }
      break;
    }
  }
}

}  // namespace ref
}  // namespace liemag
