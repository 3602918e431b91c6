#include "liemag/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace liemag {

namespace {

// Every shipped energy density is a sum of quadratic pieces (possibly of the
// forward-differenced field) plus, for the uniaxial case, the quartic
// (s.n)^2 invariant. The pieces drive the density, the functional derivative
// and the analytic rate from one description.
struct QuadPiece {
  FieldId fid;
  enum class Kind { Plain, Grad, TrSq, GradTrSq } kind;
  double coef = 0.0;
  std::vector<double> w;  // component weights (Plain/Grad)
};

struct EnergySpec {
  std::vector<QuadPiece> pieces;
  double sn_quartic_coef = 0.0;  // (coef/2) * (s.n)^2 when nonzero
};

std::vector<double> ones(int n) { return std::vector<double>(n, 1.0); }
std::vector<double> sym6_weights() { return {1.0, 1.0, 1.0, 2.0, 2.0, 2.0}; }

EnergySpec energy_spec(const Model& m) {
  using K = QuadPiece::Kind;
  EnergySpec e;
  auto plain = [&](FieldId f, double c, std::vector<double> w) {
    e.pieces.push_back({f, K::Plain, c, std::move(w)});
  };
  auto grad = [&](FieldId f, double c, std::vector<double> w) {
    e.pieces.push_back({f, K::Grad, c, std::move(w)});
  };
  auto trsq = [&](FieldId f, double c) { e.pieces.push_back({f, K::TrSq, c, {}}); };
  auto gtrsq = [&](FieldId f, double c) { e.pieces.push_back({f, K::GradTrSq, c, {}}); };

  switch (m.case_id) {
    case CaseId::NormalSuN:
      trsq(FieldId::G, m.J / 2.0);
      gtrsq(FieldId::G, m.Jbar / 2.0);
      break;
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken:
      trsq(FieldId::G, m.J / 2.0);
      trsq(FieldId::Aord, m.A / 2.0);
      gtrsq(FieldId::G, m.Jbar / 2.0);
      gtrsq(FieldId::Aord, m.B / 2.0);
      break;
    case CaseId::LlHeisenberg:
      plain(FieldId::S, -m.J, ones(3));
      grad(FieldId::S, m.Jbar / 2.0, ones(3));
      break;
    case CaseId::Uniaxial:
      plain(FieldId::S, m.J / 2.0, ones(3));
      grad(FieldId::N, m.B / 2.0, ones(3));
      e.sn_quartic_coef = m.A;
      break;
    case CaseId::Biaxial:
      plain(FieldId::S, m.J / 2.0, ones(3));
      plain(FieldId::Rmat, m.A / 2.0, ones(9));
      grad(FieldId::Rmat, m.B / 2.0, ones(9));
      break;
    case CaseId::Su3Normal:
      plain(FieldId::S, -m.J, ones(3));
      plain(FieldId::Q, -2.0 * m.J, sym6_weights());
      grad(FieldId::S, m.Jbar / 2.0, ones(3));
      grad(FieldId::Q, m.Jbar, sym6_weights());
      break;
    case CaseId::Nematic:
      plain(FieldId::S, m.J / 2.0, ones(3));
      plain(FieldId::W, m.A / 2.0, sym6_weights());
      grad(FieldId::W, m.B / 2.0, sym6_weights());
      break;
    case CaseId::Su2xSu2:
      grad(FieldId::S, m.Jbar / 2.0, ones(3));
      grad(FieldId::U, m.Jbar / 2.0, ones(3));
      break;
    case CaseId::So6:
      grad(FieldId::Gamma5, 2.0 * m.Jbar, ones(1));
      grad(FieldId::Gamma, 2.0 * m.Jbar, ones(4));
      grad(FieldId::Gbar, 2.0 * m.Jbar, ones(4));
      grad(FieldId::Sigma, 2.0 * m.Jbar, ones(6));
      break;
    case CaseId::So4:
      grad(FieldId::Sigma, m.Jbar / 2.0, ones(6));
      break;
    case CaseId::So5Full:
      grad(FieldId::GammaA, 2.0 * m.Jbar, ones(5));
      grad(FieldId::GammaAb, 2.0 * m.Jbar, ones(10));
      break;
    case CaseId::So5Tensor:
      grad(FieldId::GammaAb, 2.0 * m.Jbar, ones(10));
      break;
  }
  return e;
}

// c * sum_p w_p a_p(x) b_p(x)
void acc_plain(Field& e, const Field& a, const Field& b, const std::vector<double>& w,
               double c) {
  const int64_t ns = e.nsites();
  double* ep = e.comp(0);
  for (int p = 0; p < a.ncomp(); ++p) {
    const double* ap = a.comp(p);
    const double* bp = b.comp(p);
    const double cw = c * w[p];
    for (int64_t s = 0; s < ns; ++s) ep[s] += cw * ap[s] * bp[s];
  }
}

void acc_grad(Field& e, const Field& a, const Field& b, const std::vector<double>& w,
              double c) {
  for (int axis = 0; axis < e.grid().rank; ++axis) {
    Field da = diff_forward(a, axis);
    Field db = diff_forward(b, axis);
    acc_plain(e, da, db, w, c);
  }
}

// c * Re tr(A B) on complex matrix planes: sum_ij (rA_ij rB_ji - iA_ij iB_ji),
// symmetrized so the form stays bilinear-symmetric.
void acc_trsq(Field& e, const Field& a, const Field& b, int d, double c) {
  const int64_t ns = e.nsites();
  double* ep = e.comp(0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double* ar = a.comp(cm_re(d, i, j));
      const double* ai = a.comp(cm_im(d, i, j));
      const double* br = b.comp(cm_re(d, j, i));
      const double* bi = b.comp(cm_im(d, j, i));
      for (int64_t s = 0; s < ns; ++s) ep[s] += c * (ar[s] * br[s] - ai[s] * bi[s]);
    }
}

void acc_grad_trsq(Field& e, const Field& a, const Field& b, int d, double c) {
  for (int axis = 0; axis < e.grid().rank; ++axis) {
    Field da = diff_forward(a, axis);
    Field db = diff_forward(b, axis);
    acc_trsq(e, da, db, d, c);
  }
}

void acc_sn_quartic(Field& e, const SimState& st, double coef) {
  const Field& s = st.field(FieldId::S);
  const Field& n = st.field(FieldId::N);
  double* ep = e.comp(0);
  for (int64_t site = 0; site < e.nsites(); ++site) {
    double sv[3], nv[3];
    load_vec3(s, site, sv);
    load_vec3(n, site, nv);
    double d = sv[0] * nv[0] + sv[1] * nv[1] + sv[2] * nv[2];
    ep[site] += 0.5 * coef * d * d;
  }
}

}  // namespace

Field energy_density(const Model& m, const SimState& st) {
  EnergySpec spec = energy_spec(m);
  Field e(st.grid, 1);
  for (const QuadPiece& p : spec.pieces) {
    const Field& f = st.field(p.fid);
    switch (p.kind) {
      case QuadPiece::Kind::Plain: acc_plain(e, f, f, p.w, p.coef); break;
      case QuadPiece::Kind::Grad: acc_grad(e, f, f, p.w, p.coef); break;
      case QuadPiece::Kind::TrSq: acc_trsq(e, f, f, m.dim(), p.coef); break;
      case QuadPiece::Kind::GradTrSq: acc_grad_trsq(e, f, f, m.dim(), p.coef); break;
    }
  }
  if (spec.sn_quartic_coef != 0.0) acc_sn_quartic(e, st, spec.sn_quartic_coef);
  return e;
}

double total_energy(const Model& m, const SimState& st) {
  return volume_integral(energy_density(m, st))[0];
}

Field energy_density_rate(const Model& m, const SimState& st, const SimState& rate) {
  EnergySpec spec = energy_spec(m);
  Field e(st.grid, 1);
  for (const QuadPiece& p : spec.pieces) {
    const Field& f = st.field(p.fid);
    const Field& fd = rate.field(p.fid);
    switch (p.kind) {
      case QuadPiece::Kind::Plain: acc_plain(e, f, fd, p.w, 2.0 * p.coef); break;
      case QuadPiece::Kind::Grad: acc_grad(e, f, fd, p.w, 2.0 * p.coef); break;
      case QuadPiece::Kind::TrSq: acc_trsq(e, f, fd, m.dim(), 2.0 * p.coef); break;
      case QuadPiece::Kind::GradTrSq: acc_grad_trsq(e, f, fd, m.dim(), 2.0 * p.coef); break;
    }
  }
  if (spec.sn_quartic_coef != 0.0) {
    const Field& s = st.field(FieldId::S);
    const Field& n = st.field(FieldId::N);
    const Field& sd = rate.field(FieldId::S);
    const Field& nd = rate.field(FieldId::N);
    double* ep = e.comp(0);
    for (int64_t site = 0; site < e.nsites(); ++site) {
      double sv[3], nv[3], sdv[3], ndv[3];
      load_vec3(s, site, sv);
      load_vec3(n, site, nv);
      load_vec3(sd, site, sdv);
      load_vec3(nd, site, ndv);
      double d = sv[0] * nv[0] + sv[1] * nv[1] + sv[2] * nv[2];
      double dd = sdv[0] * nv[0] + sdv[1] * nv[1] + sdv[2] * nv[2] + sv[0] * ndv[0] +
                  sv[1] * ndv[1] + sv[2] * ndv[2];
      ep[site] += spec.sn_quartic_coef * d * dd;
    }
  }
  return e;
}

Field functional_derivative(const Model& m, const SimState& st, FieldId id) {
  EnergySpec spec = energy_spec(m);
  const Field& f = st.field(id);
  Field out = Field::zeros_like(f);
  const int d = m.dim();
  for (const QuadPiece& p : spec.pieces) {
    if (p.fid != id) continue;
    const Field& src = st.field(p.fid);
    switch (p.kind) {
      case QuadPiece::Kind::Plain: {
        for (int c = 0; c < src.ncomp(); ++c) {
          const double* sp = src.comp(c);
          double* op = out.comp(c);
          const double cw = 2.0 * p.coef * p.w[c];
          for (int64_t s = 0; s < src.nsites(); ++s) op[s] += cw * sp[s];
        }
        break;
      }
      case QuadPiece::Kind::Grad: {
        Field lap = laplacian(src);
        for (int c = 0; c < src.ncomp(); ++c) {
          const double* lp = lap.comp(c);
          double* op = out.comp(c);
          const double cw = -2.0 * p.coef * p.w[c];
          for (int64_t s = 0; s < src.nsites(); ++s) op[s] += cw * lp[s];
        }
        break;
      }
      case QuadPiece::Kind::TrSq: {
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            const double* rt = src.comp(cm_re(d, j, i));
            const double* it = src.comp(cm_im(d, j, i));
            double* orr = out.comp(cm_re(d, i, j));
            double* oii = out.comp(cm_im(d, i, j));
            for (int64_t s = 0; s < src.nsites(); ++s) {
              orr[s] += 2.0 * p.coef * rt[s];
              oii[s] -= 2.0 * p.coef * it[s];
            }
          }
        break;
      }
      case QuadPiece::Kind::GradTrSq: {
        Field lap = laplacian(src);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            const double* rt = lap.comp(cm_re(d, j, i));
            const double* it = lap.comp(cm_im(d, j, i));
            double* orr = out.comp(cm_re(d, i, j));
            double* oii = out.comp(cm_im(d, i, j));
            for (int64_t s = 0; s < src.nsites(); ++s) {
              orr[s] -= 2.0 * p.coef * rt[s];
              oii[s] += 2.0 * p.coef * it[s];
            }
          }
        break;
      }
    }
  }
  if (spec.sn_quartic_coef != 0.0 && (id == FieldId::S || id == FieldId::N)) {
    const Field& s = st.field(FieldId::S);
    const Field& n = st.field(FieldId::N);
    for (int64_t site = 0; site < out.nsites(); ++site) {
      double sv[3], nv[3];
      load_vec3(s, site, sv);
      load_vec3(n, site, nv);
      double dot = sv[0] * nv[0] + sv[1] * nv[1] + sv[2] * nv[2];
      const double* other = (id == FieldId::S) ? nv : sv;
      for (int c = 0; c < 3; ++c) out.at(c, site) += spec.sn_quartic_coef * dot * other[c];
    }
  }
  return out;
}

}  // namespace liemag
