#include "liemag/integrate.hpp"

#include <cmath>

namespace liemag {

namespace {

double max_field_norm(const SimState& st) {
  double m = 0.0;
  for (const auto& kv : st.fields) m = std::max(m, kv.second.max_abs());
  return m;
}

void project(SimState& st, const Model& m, const StepOptions& opts) {
  if (opts.hermitize) {
    for (FieldId id : {FieldId::G, FieldId::Aord}) {
      if (!st.has(id)) continue;
      Field& f = st.field(id);
      const int d = m.dim();
      for (int64_t s = 0; s < f.nsites(); ++s) store_cmat(f, d, s, load_cmat(f, d, s).hermitized());
    }
  }
  if (opts.reorthogonalize_r && st.has(FieldId::Rmat)) {
    Field& f = st.field(FieldId::Rmat);
    for (int64_t s = 0; s < f.nsites(); ++s) {
      RMat r = load_mat3(f, s);
      for (int it = 0; it < 2; ++it) {
        RMat rtr = r.transpose() * r;
        r = (r * 3.0 - r * rtr) * 0.5;  // Newton step toward the polar factor
      }
      store_mat3(f, s, r);
    }
  }
  if (opts.renormalize_n && st.has(FieldId::N)) {
    Field& f = st.field(FieldId::N);
    for (int64_t s = 0; s < f.nsites(); ++s) {
      double v[3];
      load_vec3(f, s, v);
      double nrm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (nrm > 1e-300)
        for (double& x : v) x /= nrm;
      store_vec3(f, s, v);
    }
  }
}

}  // namespace

double auto_dt(const Model& m, const SimState& st, double safety) {
  const double mnorm = std::max(1e-12, max_field_norm(st));
  double k2max = 0.0;
  for (int a = 0; a < st.grid.rank; ++a) k2max += 4.0 / (st.grid.h[a] * st.grid.h[a]);
  const double grad_rate = 2.0 * (std::abs(m.Jbar) + std::abs(m.B)) * mnorm * k2max;
  const double hom_rate = (std::abs(m.J) + std::abs(m.A) * mnorm * mnorm) * mnorm;
  return safety / (grad_rate + hom_rate);
}

void add_scaled(SimState& st, double a, const SimState& rate) {
  for (size_t i = 0; i < st.fields.size(); ++i) axpy(st.fields[i].second, a, rate.fields[i].second);
}

void step_rk4(SimState& st, const Model& m, double dt, const StepOptions& opts) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
  SimState x0 = st;

  SimState k1 = compute_rhs(m, st, opts.impl);
  SimState tmp = x0;
  add_scaled(tmp, 0.5 * dt, k1);
  SimState k2 = compute_rhs(m, tmp, opts.impl);
  tmp = x0;
  add_scaled(tmp, 0.5 * dt, k2);
  SimState k3 = compute_rhs(m, tmp, opts.impl);
  tmp = x0;
  add_scaled(tmp, dt, k3);
  SimState k4 = compute_rhs(m, tmp, opts.impl);

  for (size_t i = 0; i < st.fields.size(); ++i)
    rk4_combine(st.fields[i].second, x0.fields[i].second, dt, k1.fields[i].second,
                k2.fields[i].second, k3.fields[i].second, k4.fields[i].second);
  st.time += dt;
  st.step += 1;
  project(st, m, opts);
  if (!st.finite())
    throw IntegrationBlowup("non-finite field values at step " + std::to_string(st.step) +
                            ", t = " + std::to_string(st.time));
}

}  // namespace liemag
