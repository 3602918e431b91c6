#include "liemag/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liemag/basis.hpp"

namespace liemag {

namespace {

constexpr cplx kI{0.0, 1.0};

inline void cross(const double a[3], const double b[3], double out[3]) {
  out[0] = a[1] * b[2] - a[2] * b[1];
  out[1] = a[2] * b[0] - a[0] * b[2];
  out[2] = a[0] * b[1] - a[1] * b[0];
}

std::string idx2(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

std::vector<FieldId> conserved_fields(const Model& m) {
  switch (m.case_id) {
    case CaseId::NormalSuN:
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken: return {FieldId::G};
    case CaseId::LlHeisenberg:
    case CaseId::Uniaxial:
    case CaseId::Biaxial:
    case CaseId::Nematic: return {FieldId::S};
    case CaseId::Su3Normal: return {FieldId::S, FieldId::Q};
    case CaseId::Su2xSu2: return {FieldId::U, FieldId::S};
    case CaseId::So6:
      return {FieldId::Gamma5, FieldId::Gamma, FieldId::Gbar, FieldId::Sigma};
    case CaseId::So4: return {FieldId::Sigma};
    case CaseId::So5Full: return {FieldId::GammaA, FieldId::GammaAb};
    case CaseId::So5Tensor: return {FieldId::GammaAb};
  }
  return {};
}

std::vector<std::string> component_names(FieldId id, const Model& m) {
  const char* ax = "xyz";
  std::vector<std::string> out;
  switch (id) {
    case FieldId::G:
    case FieldId::Aord: {
      const std::string p = field_name(id);
      const int d = m.dim();
      out.resize(2 * d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          out[cm_re(d, i, j)] = p + "_re_" + idx2(i, j);
          out[cm_im(d, i, j)] = p + "_im_" + idx2(i, j);
        }
      break;
    }
    case FieldId::S:
    case FieldId::N:
    case FieldId::U:
      for (int a = 0; a < 3; ++a) out.push_back(field_name(id) + "_" + ax[a]);
      break;
    case FieldId::Rmat:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.push_back("R_" + idx2(i, j));
      break;
    case FieldId::Q:
    case FieldId::W: {
      const std::string p = field_name(id);
      out = {p + "_11", p + "_22", p + "_33", p + "_12", p + "_13", p + "_23"};
      break;
    }
    case FieldId::Sigma:
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.push_back("sigma_" + idx2(i, j));
      break;
    case FieldId::Gamma5: out = {"gamma5"}; break;
    case FieldId::Gamma:
      for (int i = 0; i < 4; ++i) out.push_back("gamma_" + std::to_string(i + 1));
      break;
    case FieldId::Gbar:
      for (int i = 0; i < 4; ++i) out.push_back("gbar_" + std::to_string(i + 1));
      break;
    case FieldId::GammaA:
      for (int i = 0; i < 5; ++i) out.push_back("gamma_a" + std::to_string(i + 1));
      break;
    case FieldId::GammaAb:
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) out.push_back("gamma_" + idx2(i, j));
      break;
    case FieldId::GAnti:
      for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j) out.push_back("ga_" + idx2(i, j));
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Casimir densities
// ---------------------------------------------------------------------------

namespace {

void add_trace_powers_cmat(std::vector<std::pair<std::string, Field>>& out,
                           const std::string& prefix, const Field& f, int d, int pmax) {
  for (int p = 2; p <= pmax; ++p) {
    Field c(f.grid(), 1);
    for (int64_t s = 0; s < f.nsites(); ++s)
      c.at(0, s) = trace_power(load_cmat(f, d, s), p).real();
    out.emplace_back(prefix + std::to_string(p), std::move(c));
  }
}

void add_trace_powers_from_coeffs(std::vector<std::pair<std::string, Field>>& out,
                                  const std::string& prefix, const SimState& st,
                                  const std::vector<const Field*>& fields,
                                  const BasisSet& basis, int pmax) {
  const int64_t ns = st.grid.nsites();
  std::vector<Field> cs;
  for (int p = 2; p <= pmax; ++p) cs.emplace_back(st.grid, 1);
  for (int64_t s = 0; s < ns; ++s) {
    CMat g(basis.dim);
    int k = 0;
    for (const Field* f : fields)
      for (int c = 0; c < f->ncomp(); ++c, ++k) g += basis.elems[k] * f->at(c, s);
    CMat acc = g;
    for (int p = 2; p <= pmax; ++p) {
      acc = acc * g;
      cs[p - 2].at(0, s) = acc.trace().real();
    }
  }
  for (int p = 2; p <= pmax; ++p)
    out.emplace_back(prefix + std::to_string(p), std::move(cs[p - 2]));
}

void add_trace_powers_asym(std::vector<std::pair<std::string, Field>>& out,
                           const std::string& prefix, const Field& f, int n,
                           const std::vector<int>& powers) {
  for (int p : powers) {
    Field c(f.grid(), 1);
    for (int64_t s = 0; s < f.nsites(); ++s) {
      RMat m = load_asym(f, n, s);
      RMat acc = m;
      for (int k = 1; k < p; ++k) acc = acc * m;
      c.at(0, s) = acc.trace();
    }
    out.emplace_back(prefix + std::to_string(p), std::move(c));
  }
}

}  // namespace

std::vector<std::pair<std::string, Field>> casimir_fields(const Model& m,
                                                          const SimState& st) {
  std::vector<std::pair<std::string, Field>> out;
  const int64_t ns = st.grid.nsites();
  auto dot_field = [&](const Field& a, const Field& b, const std::string& name) {
    Field c(st.grid, 1);
    for (int64_t s = 0; s < ns; ++s) {
      double av[3], bv[3];
      load_vec3(a, s, av);
      load_vec3(b, s, bv);
      c.at(0, s) = av[0] * bv[0] + av[1] * bv[1] + av[2] * bv[2];
    }
    out.emplace_back(name, std::move(c));
  };

  switch (m.case_id) {
    case CaseId::NormalSuN:
      add_trace_powers_cmat(out, "tr_g", st.field(FieldId::G), m.dim(), m.dim());
      break;
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken:
      // tr g^n is not central in the extended algebra; tr a^n is.
      add_trace_powers_cmat(out, "tr_a", st.field(FieldId::Aord), m.dim(), m.dim());
      break;
    case CaseId::LlHeisenberg:
      dot_field(st.field(FieldId::S), st.field(FieldId::S), "s2");
      break;
    case CaseId::Uniaxial:
      dot_field(st.field(FieldId::S), st.field(FieldId::N), "s_dot_n");
      dot_field(st.field(FieldId::N), st.field(FieldId::N), "n2");
      break;
    case CaseId::Biaxial: {
      const Field& r = st.field(FieldId::Rmat);
      for (int l = 0; l < 3; ++l)
        for (int mm = l; mm < 3; ++mm) {
          Field c(st.grid, 1);
          for (int64_t s = 0; s < ns; ++s) {
            RMat rm = load_mat3(r, s);
            double acc = 0.0;
            for (int b = 0; b < 3; ++b) acc += rm.at(b, l) * rm.at(b, mm);
            c.at(0, s) = acc;
          }
          out.emplace_back("RtR_" + idx2(l, mm), std::move(c));
        }
      break;
    }
    case CaseId::Su3Normal: {
      // tr g^n of g = q - i eps_hat(s).
      const Field& sf = st.field(FieldId::S);
      const Field& qf = st.field(FieldId::Q);
      std::vector<Field> cs{Field(st.grid, 1), Field(st.grid, 1)};
      for (int64_t s = 0; s < ns; ++s) {
        double sv[3];
        load_vec3(sf, s, sv);
        RMat q = load_sym3(qf, s);
        CMat g(3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            double eh = 0.0;
            if (i != j) {
              int k = 3 - i - j;
              double e = static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
              eh = 0.5 * e * sv[k];
            }
            g.at(i, j) = cplx(q.at(i, j), -eh);
          }
        cs[0].at(0, s) = trace_power(g, 2).real();
        cs[1].at(0, s) = trace_power(g, 3).real();
      }
      out.emplace_back("tr_g2", std::move(cs[0]));
      out.emplace_back("tr_g3", std::move(cs[1]));
      break;
    }
    case CaseId::Nematic: {
      const Field& w = st.field(FieldId::W);
      for (int p = 1; p <= 3; ++p) {
        Field c(st.grid, 1);
        for (int64_t s = 0; s < ns; ++s) {
          RMat wm = load_sym3(w, s);
          RMat acc = wm;
          for (int k = 1; k < p; ++k) acc = acc * wm;
          c.at(0, s) = acc.trace();
        }
        out.emplace_back("tr_w" + std::to_string(p), std::move(c));
      }
      break;
    }
    case CaseId::Su2xSu2: {
      dot_field(st.field(FieldId::S), st.field(FieldId::U), "s_dot_u");
      Field c(st.grid, 1);
      const Field& sf = st.field(FieldId::S);
      const Field& uf = st.field(FieldId::U);
      for (int64_t s = 0; s < ns; ++s) {
        double sv[3], uv[3];
        load_vec3(sf, s, sv);
        load_vec3(uf, s, uv);
        c.at(0, s) = sv[0] * sv[0] + sv[1] * sv[1] + sv[2] * sv[2] + uv[0] * uv[0] +
                     uv[1] * uv[1] + uv[2] * uv[2];
      }
      out.emplace_back("s2_plus_u2", std::move(c));
      break;
    }
    case CaseId::So6: {
      std::vector<const Field*> fs = {&st.field(FieldId::Gamma5), &st.field(FieldId::Gamma),
                                      &st.field(FieldId::Gbar), &st.field(FieldId::Sigma)};
      add_trace_powers_from_coeffs(out, "tr_g", st, fs, dirac_basis(), 4);
      break;
    }
    case CaseId::So4:
      add_trace_powers_asym(out, "tr_sigma", st.field(FieldId::Sigma), 4, {2, 4});
      break;
    case CaseId::So5Full: {
      std::vector<const Field*> fs = {&st.field(FieldId::GammaA),
                                      &st.field(FieldId::GammaAb)};
      add_trace_powers_from_coeffs(out, "tr_g", st, fs, so5_basis(), 4);
      break;
    }
    case CaseId::So5Tensor:
      add_trace_powers_asym(out, "tr_gab", st.field(FieldId::GammaAb), 5, {2, 4});
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports and drifts
// ---------------------------------------------------------------------------

ConservationReport conservation_report(const Model& m, const SimState& st) {
  ConservationReport rep;
  rep.time = st.time;
  rep.step = st.step;
  rep.energy = total_energy(m, st);
  for (FieldId fid : conserved_fields(m)) {
    std::vector<double> q = volume_integral(st.field(fid));
    std::vector<std::string> names = component_names(fid, m);
    for (size_t c = 0; c < q.size(); ++c) rep.charges.emplace_back(names[c], q[c]);
  }
  for (auto& [name, f] : casimir_fields(m, st)) {
    double lo = f.at(0, 0), hi = f.at(0, 0);
    for (int64_t s = 1; s < f.nsites(); ++s) {
      lo = std::min(lo, f.at(0, s));
      hi = std::max(hi, f.at(0, s));
    }
    rep.casimirs.push_back({name, lo, hi});
  }
  return rep;
}

DriftReport drift_report(const ConservationReport& now, const ConservationReport& base) {
  DriftReport d;
  d.energy = std::abs(now.energy - base.energy) / std::max(std::abs(base.energy), 1e-9);
  double qmax = 0.0;
  for (auto& [name, v] : base.charges) qmax = std::max(qmax, std::abs(v));
  for (size_t i = 0; i < base.charges.size(); ++i) {
    double scale = std::max({std::abs(base.charges[i].second), 0.05 * qmax, 1e-9});
    double drift = std::abs(now.charges[i].second - base.charges[i].second) / scale;
    d.charges.emplace_back(base.charges[i].first, drift);
    d.max_charge = std::max(d.max_charge, drift);
  }
  return d;
}

double max_pointwise_casimir_drift(const Model& m,
                                   const std::vector<std::pair<std::string, Field>>& base,
                                   const SimState& now) {
  auto cur = casimir_fields(m, now);
  double global = 0.0;
  for (auto& [name, f] : base)
    for (int64_t s = 0; s < f.nsites(); ++s) global = std::max(global, std::abs(f.at(0, s)));
  double worst = 0.0;
  for (size_t k = 0; k < base.size(); ++k) {
    double scale = 0.0;
    const Field& b = base[k].second;
    for (int64_t s = 0; s < b.nsites(); ++s) scale = std::max(scale, std::abs(b.at(0, s)));
    scale = std::max({scale, 0.05 * global, 1e-9});
    const Field& c = cur[k].second;
    for (int64_t s = 0; s < b.nsites(); ++s)
      worst = std::max(worst, std::abs(c.at(0, s) - b.at(0, s)) / scale);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Charge fluxes: kernels' bilinears with the Laplacian replaced by D+ and the
// overall sign flipped (rate = -div flux exactly, backward-difference div).
// ---------------------------------------------------------------------------

std::vector<CaseFlux> flux_field(const Model& m, const SimState& st) {
  const Grid& g = st.grid;
  const int64_t ns = g.nsites();
  std::vector<CaseFlux> out;
  auto flux_for = [&](FieldId fid) -> std::vector<Field>& {
    out.push_back({fid, {}});
    for (int a = 0; a < g.rank; ++a) out.back().per_axis.emplace_back(g, field_ncomp(fid, m));
    return out.back().per_axis;
  };

  switch (m.case_id) {
    case CaseId::NormalSuN: {
      const Field& gf = st.field(FieldId::G);
      const int d = m.dim();
      auto& jg = flux_for(FieldId::G);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dg = diff_forward(gf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          CMat gm = load_cmat(gf, d, s);
          CMat dm = load_cmat(dg, d, s);
          store_cmat(jg[axis], d, s, (kI * m.Jbar) * commutator(gm, dm));
        }
      }
      break;
    }
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken: {
      const Field& gf = st.field(FieldId::G);
      const Field& af = st.field(FieldId::Aord);
      const int d = m.dim();
      auto& jg = flux_for(FieldId::G);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dg = diff_forward(gf, axis);
        Field da = diff_forward(af, axis);
        for (int64_t s = 0; s < ns; ++s) {
          CMat gm = load_cmat(gf, d, s);
          CMat am = load_cmat(af, d, s);
          CMat dgm = load_cmat(dg, d, s);
          CMat dam = load_cmat(da, d, s);
          store_cmat(jg[axis], d, s,
                     (kI * m.Jbar) * commutator(gm, dgm) + (kI * m.B) * commutator(am, dam));
        }
      }
      break;
    }
    case CaseId::LlHeisenberg: {
      const Field& sf = st.field(FieldId::S);
      auto& js = flux_for(FieldId::S);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dsf = diff_forward(sf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          double sv[3], dv[3], c[3];
          load_vec3(sf, s, sv);
          load_vec3(dsf, s, dv);
          cross(dv, sv, c);
          for (int k = 0; k < 3; ++k) c[k] *= m.Jbar;
          store_vec3(js[axis], s, c);
        }
      }
      break;
    }
    case CaseId::Uniaxial: {
      const Field& nf = st.field(FieldId::N);
      auto& js = flux_for(FieldId::S);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dnf = diff_forward(nf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          double nv[3], dv[3], c[3];
          load_vec3(nf, s, nv);
          load_vec3(dnf, s, dv);
          cross(dv, nv, c);
          for (int k = 0; k < 3; ++k) c[k] *= m.B;
          store_vec3(js[axis], s, c);
        }
      }
      break;
    }
    case CaseId::Biaxial: {
      const Field& rf = st.field(FieldId::Rmat);
      auto& js = flux_for(FieldId::S);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field drf = diff_forward(rf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          RMat rm = load_mat3(rf, s);
          RMat dm = load_mat3(drf, s);
          double acc[3] = {0.0, 0.0, 0.0};
          for (int col = 0; col < 3; ++col) {
            double a[3] = {dm.at(0, col), dm.at(1, col), dm.at(2, col)};
            double b[3] = {rm.at(0, col), rm.at(1, col), rm.at(2, col)};
            double c[3];
            cross(a, b, c);
            for (int k = 0; k < 3; ++k) acc[k] += m.B * c[k];
          }
          store_vec3(js[axis], s, acc);
        }
      }
      break;
    }
    case CaseId::Su3Normal: {
      const Field& sf = st.field(FieldId::S);
      const Field& qf = st.field(FieldId::Q);
      auto& js = flux_for(FieldId::S);
      auto& jq = flux_for(FieldId::Q);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dsf = diff_forward(sf, axis);
        Field dqf = diff_forward(qf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          double sv[3], dsv[3];
          load_vec3(sf, s, sv);
          load_vec3(dsf, s, dsv);
          RMat q = load_sym3(qf, s);
          RMat dq = load_sym3(dqf, s);
          RMat eh(3), deh(3);
          eh.at(0, 1) = 0.5 * sv[2];
          eh.at(1, 0) = -0.5 * sv[2];
          eh.at(1, 2) = 0.5 * sv[0];
          eh.at(2, 1) = -0.5 * sv[0];
          eh.at(2, 0) = 0.5 * sv[1];
          eh.at(0, 2) = -0.5 * sv[1];
          deh.at(0, 1) = 0.5 * dsv[2];
          deh.at(1, 0) = -0.5 * dsv[2];
          deh.at(1, 2) = 0.5 * dsv[0];
          deh.at(2, 1) = -0.5 * dsv[0];
          deh.at(2, 0) = 0.5 * dsv[1];
          deh.at(0, 2) = -0.5 * dsv[1];
          RMat jqm = (commutator(deh, q) + commutator(dq, eh)) * (-m.Jbar);
          RMat jeh = (commutator(q, dq) + commutator(deh, eh)) * (-m.Jbar);
          double jsv[3];
          jsv[0] = jeh.at(1, 2) - jeh.at(2, 1);
          jsv[1] = jeh.at(2, 0) - jeh.at(0, 2);
          jsv[2] = jeh.at(0, 1) - jeh.at(1, 0);
          store_sym3(jq[axis], s, jqm);
          store_vec3(js[axis], s, jsv);
        }
      }
      break;
    }
    case CaseId::Nematic: {
      const Field& wf = st.field(FieldId::W);
      auto& js = flux_for(FieldId::S);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dwf = diff_forward(wf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          RMat w = load_sym3(wf, s);
          RMat dw = load_sym3(dwf, s);
          RMat mprod = dw * w.transpose();
          double c[3] = {2.0 * m.B * (mprod.at(1, 2) - mprod.at(2, 1)),
                         2.0 * m.B * (mprod.at(2, 0) - mprod.at(0, 2)),
                         2.0 * m.B * (mprod.at(0, 1) - mprod.at(1, 0))};
          store_vec3(js[axis], s, c);
        }
      }
      break;
    }
    case CaseId::Su2xSu2: {
      const Field& uf = st.field(FieldId::U);
      const Field& sf = st.field(FieldId::S);
      auto& ju = flux_for(FieldId::U);
      auto& js = flux_for(FieldId::S);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field duf = diff_forward(uf, axis);
        Field dsf = diff_forward(sf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          double uv[3], sv[3], du[3], ds[3], c1[3], c2[3], o[3];
          load_vec3(uf, s, uv);
          load_vec3(sf, s, sv);
          load_vec3(duf, s, du);
          load_vec3(dsf, s, ds);
          cross(ds, uv, c1);
          cross(du, sv, c2);
          for (int k = 0; k < 3; ++k) o[k] = m.Jbar * (c1[k] + c2[k]);
          store_vec3(ju[axis], s, o);
          cross(du, uv, c1);
          cross(ds, sv, c2);
          for (int k = 0; k < 3; ++k) o[k] = m.Jbar * (c1[k] + c2[k]);
          store_vec3(js[axis], s, o);
        }
      }
      break;
    }
    case CaseId::So6: {
      const Field& g5 = st.field(FieldId::Gamma5);
      const Field& gm = st.field(FieldId::Gamma);
      const Field& gb = st.field(FieldId::Gbar);
      const Field& sg = st.field(FieldId::Sigma);
      auto& j5 = flux_for(FieldId::Gamma5);
      auto& jg = flux_for(FieldId::Gamma);
      auto& jb = flux_for(FieldId::Gbar);
      auto& js = flux_for(FieldId::Sigma);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field d5 = diff_forward(g5, axis);
        Field dg = diff_forward(gm, axis);
        Field db = diff_forward(gb, axis);
        Field dsg = diff_forward(sg, axis);
        for (int64_t s = 0; s < ns; ++s) {
          double c5 = g5.at(0, s), dc5 = d5.at(0, s);
          double cg[4], dcg[4], cb[4], dcb[4];
          for (int mu = 0; mu < 4; ++mu) {
            cg[mu] = gm.at(mu, s);
            dcg[mu] = dg.at(mu, s);
            cb[mu] = gb.at(mu, s);
            dcb[mu] = db.at(mu, s);
          }
          RMat sig = load_asym(sg, 4, s);
          RMat dsig = load_asym(dsg, 4, s);
          double a5 = 0.0;
          for (int mu = 0; mu < 4; ++mu) a5 += cb[mu] * dcg[mu] - cg[mu] * dcb[mu];
          j5[axis].at(0, s) = -2.0 * m.Jbar * a5;
          for (int mu = 0; mu < 4; ++mu) {
            double acc = c5 * dcb[mu] - cb[mu] * dc5;
            for (int nu = 0; nu < 4; ++nu) acc += sig.at(mu, nu) * dcg[nu] - cg[nu] * dsig.at(mu, nu);
            jg[axis].at(mu, s) = -2.0 * m.Jbar * acc;
          }
          for (int mu = 0; mu < 4; ++mu) {
            double acc = cg[mu] * dc5 - c5 * dcg[mu];
            for (int nu = 0; nu < 4; ++nu) acc += cb[nu] * dsig.at(nu, mu) - sig.at(nu, mu) * dcb[nu];
            jb[axis].at(mu, s) = -2.0 * m.Jbar * acc;
          }
          RMat jsg(4);
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) {
              double acc = cg[nu] * dcg[mu] - cg[mu] * dcg[nu] + cb[nu] * dcb[mu] - cb[mu] * dcb[nu];
              for (int l = 0; l < 4; ++l)
                acc += sig.at(mu, l) * dsig.at(l, nu) - sig.at(l, nu) * dsig.at(mu, l);
              jsg.at(mu, nu) = -2.0 * m.Jbar * acc;
              jsg.at(nu, mu) = -jsg.at(mu, nu);
            }
          store_asym(js[axis], 4, s, jsg);
        }
      }
      break;
    }
    case CaseId::So4: {
      const Field& sg = st.field(FieldId::Sigma);
      auto& js = flux_for(FieldId::Sigma);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dsg = diff_forward(sg, axis);
        for (int64_t s = 0; s < ns; ++s) {
          RMat sm = load_asym(sg, 4, s);
          RMat dm = load_asym(dsg, 4, s);
          store_asym(js[axis], 4, s, commutator(sm, dm) * (-2.0 * m.Jbar));
        }
      }
      break;
    }
    case CaseId::So5Full:
    case CaseId::So5Tensor: {
      const bool full = m.case_id == CaseId::So5Full;
      const Field& gab = st.field(FieldId::GammaAb);
      std::vector<Field>* ja = nullptr;
      if (full) ja = &flux_for(FieldId::GammaA);
      auto& jab = flux_for(FieldId::GammaAb);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field dab = diff_forward(gab, axis);
        Field dav;
        if (full) dav = diff_forward(st.field(FieldId::GammaA), axis);
        for (int64_t s = 0; s < ns; ++s) {
          RMat t = load_asym(gab, 5, s);
          RMat dt = load_asym(dab, 5, s);
          RMat jt = commutator(dt, t) * (-2.0 * m.Jbar);
          if (full) {
            const Field& ga = st.field(FieldId::GammaA);
            double v[5], dv[5];
            for (int a = 0; a < 5; ++a) {
              v[a] = ga.at(a, s);
              dv[a] = dav.at(a, s);
            }
            for (int a = 0; a < 5; ++a) {
              double acc = 0.0;
              for (int b = 0; b < 5; ++b) acc += t.at(a, b) * dv[b] - dt.at(a, b) * v[b];
              (*ja)[axis].at(a, s) = -2.0 * m.Jbar * acc;
            }
            for (int a = 0; a < 5; ++a)
              for (int b = 0; b < 5; ++b) jt.at(a, b) -= 2.0 * m.Jbar * (dv[a] * v[b] - v[a] * dv[b]);
          }
          store_asym(jab[axis], 5, s, jt);
        }
      }
      break;
    }
  }
  return out;
}

double charge_continuity_residual(const Model& m, const SimState& st) {
  SimState rate = compute_rhs(m, st);
  std::vector<CaseFlux> fluxes = flux_field(m, st);
  double worst = 0.0;
  for (const CaseFlux& cf : fluxes) {
    Field div = divergence_adjoint(cf.per_axis);
    const Field& r = rate.field(cf.fid);
    for (int c = 0; c < r.ncomp(); ++c)
      for (int64_t s = 0; s < r.nsites(); ++s)
        worst = std::max(worst, std::abs(r.at(c, s) + div.at(c, s)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Energy flux (matrix cases and LL); link-centered
// ---------------------------------------------------------------------------

std::vector<Field> energy_flux(const Model& m, const SimState& st) {
  const Grid& g = st.grid;
  const int64_t ns = g.nsites();
  std::vector<Field> out;

  switch (m.case_id) {
    case CaseId::NormalSuN:
    case CaseId::DegenerateSuN:
    case CaseId::Su3Broken: {
      const bool degen = m.case_id != CaseId::NormalSuN;
      const int d = m.dim();
      const Field& gf = st.field(FieldId::G);
      Field lap_g = laplacian(gf);
      Field lap_a, af;
      if (degen) {
        af = st.field(FieldId::Aord);
        lap_a = laplacian(af);
      }
      for (int axis = 0; axis < g.rank; ++axis) {
        Field q(g, 1);
        Field dg = diff_forward(gf, axis);
        Field da = degen ? diff_forward(af, axis) : Field();
        for (int64_t s = 0; s < ns; ++s) {
          int64_t sp = g.neighbor(s, axis, +1);
          CMat gm = load_cmat(gf, d, s);
          CMat dgm = load_cmat(dg, d, s);
          CMat wg = load_cmat(gf, d, s) * m.J - load_cmat(lap_g, d, s) * m.Jbar;
          CMat wgp = load_cmat(gf, d, sp) * m.J - load_cmat(lap_g, d, sp) * m.Jbar;
          CMat wbar = (wg + wgp) * 0.5;
          CMat j = (kI * m.Jbar) * commutator(gm, dgm);
          if (degen) {
            CMat am = load_cmat(af, d, s);
            CMat dam = load_cmat(da, d, s);
            j += (kI * m.B) * commutator(am, dam);
            CMat wa = am * m.A - load_cmat(lap_a, d, s) * m.B;
            CMat wap = load_cmat(af, d, sp) * m.A - load_cmat(lap_a, d, sp) * m.B;
            CMat wabar = (wa + wap) * 0.5;
            CMat abar = (am + load_cmat(af, d, sp)) * 0.5;
            // i tr(Wa [a, de/d(grad g)]) term, mirrored in printed order.
            CMat inner = commutator(abar, dgm * m.Jbar);
            q.at(0, s) += (kI * (wabar * inner).trace()).real();
          }
          q.at(0, s) += (wbar * j).trace().real();
        }
        out.push_back(std::move(q));
      }
      return out;
    }
    case CaseId::LlHeisenberg: {
      const Field& sf = st.field(FieldId::S);
      SimState rate = compute_rhs(m, st);
      const Field& sd = rate.field(FieldId::S);
      for (int axis = 0; axis < g.rank; ++axis) {
        Field q(g, 1);
        Field ds = diff_forward(sf, axis);
        for (int64_t s = 0; s < ns; ++s) {
          int64_t sp = g.neighbor(s, axis, +1);
          double acc = 0.0;
          for (int c = 0; c < 3; ++c)
            acc += ds.at(c, s) * 0.5 * (sd.at(c, s) + sd.at(c, sp));
          q.at(0, s) = -m.Jbar * acc;
        }
        out.push_back(std::move(q));
      }
      return out;
    }
    default:
      throw std::invalid_argument(
          "energy_flux: case " + case_name(m.case_id) +
          " not supported; supported: NORMAL_SU_N DEGENERATE_SU_N SU3_BROKEN LL_HEISENBERG");
  }
}

double energy_continuity_residual(const Model& m, const SimState& st) {
  SimState rate = compute_rhs(m, st);
  Field edot = energy_density_rate(m, st, rate);
  Field div = divergence_adjoint(energy_flux(m, st));
  double worst = 0.0;
  for (int64_t s = 0; s < st.grid.nsites(); ++s)
    worst = std::max(worst, std::abs(edot.at(0, s) + div.at(0, s)));
  return worst;
}

// ---------------------------------------------------------------------------
// Dispersion
// ---------------------------------------------------------------------------

std::complex<double> transverse_mode_amplitude(const Field& s, int mode) {
  const Grid& g = s.grid();
  const double w = 2.0 * 3.14159265358979323846 * mode / g.n[0];
  std::complex<double> acc{0.0, 0.0};
  for (int64_t site = 0; site < g.nsites(); ++site) {
    int c[3];
    g.coords(site, c[0], c[1], c[2]);
    std::complex<double> psi{s.at(0, site), s.at(1, site)};
    acc += psi * std::exp(std::complex<double>(0.0, -w * c[0]));
  }
  return acc / static_cast<double>(g.nsites());
}

DispersionFit measure_dispersion(const std::vector<std::complex<double>>& series,
                                 double dt) {
  DispersionFit fit;
  if (series.size() < 3) {
    fit.degenerate = true;
    return fit;
  }
  const double a0 = std::abs(series.front());
  if (a0 < 1e-14) {
    fit.degenerate = true;
    return fit;
  }
  for (const auto& c : series)
    if (std::abs(c) < 1e-3 * a0) {
      fit.degenerate = true;
      return fit;
    }
  // Unwrapped phase, linear least-squares slope.
  std::vector<double> phi(series.size());
  phi[0] = std::arg(series[0]);
  for (size_t i = 1; i < series.size(); ++i) {
    double p = std::arg(series[i]);
    double prev = phi[i - 1];
    while (p - prev > 3.14159265358979323846) p -= 2.0 * 3.14159265358979323846;
    while (p - prev < -3.14159265358979323846) p += 2.0 * 3.14159265358979323846;
    phi[i] = p;
  }
  const size_t n = series.size();
  double st = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double t = dt * static_cast<double>(i);
    st += t;
    sp += phi[i];
    stt += t * t;
    stp += t * phi[i];
  }
  double denom = n * stt - st * st;
  double slope = (n * stp - st * sp) / denom;
  double icept = (sp - slope * st) / n;
  fit.omega = -slope;  // amplitude evolves as exp(-i omega t)
  for (size_t i = 0; i < n; ++i)
    fit.residual = std::max(fit.residual,
                            std::abs(phi[i] - (icept + slope * dt * static_cast<double>(i))));
  return fit;
}

double k2_discrete(int mode, int npoints, double h) {
  const double k = 2.0 * 3.14159265358979323846 * mode / (npoints * h);
  return (2.0 / (h * h)) * (1.0 - std::cos(k * h));
}

}  // namespace liemag
