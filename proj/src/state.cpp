#include "liemag/state.hpp"

#include <cmath>
#include <stdexcept>

namespace liemag {

bool SimState::has(FieldId id) const {
  for (const auto& kv : fields)
    if (kv.first == id) return true;
  return false;
}

Field& SimState::field(FieldId id) {
  for (auto& kv : fields)
    if (kv.first == id) return kv.second;
  throw std::invalid_argument("state: missing field " + field_name(id));
}

const Field& SimState::field(FieldId id) const {
  for (const auto& kv : fields)
    if (kv.first == id) return kv.second;
  throw std::invalid_argument("state: missing field " + field_name(id));
}

bool SimState::finite() const {
  for (const auto& kv : fields)
    if (!kv.second.finite()) return false;
  return true;
}

SimState make_state(const Model& m, const Grid& g) {
  SimState st;
  st.grid = g;
  for (auto [id, nc] : m.required_fields()) st.fields.emplace_back(id, Field(g, nc));
  return st;
}

int asym_pair_index(int n, int i, int j) {
  if (i >= j) throw std::invalid_argument("asym_pair_index: need i < j");
  int c = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++c)
      if (a == i && b == j) return c;
  throw std::invalid_argument("asym_pair_index: out of range");
}

IcSpec::Kind ic_kind_from_name(const std::string& name) {
  if (name == "uniform") return IcSpec::Kind::Uniform;
  if (name == "random_smooth") return IcSpec::Kind::RandomSmooth;
  if (name == "single_mode") return IcSpec::Kind::SingleMode;
  if (name == "domain_wall") return IcSpec::Kind::DomainWall;
  throw std::invalid_argument(
      "unknown initial-condition kind '" + name +
      "'; valid: uniform random_smooth single_mode domain_wall");
}

std::string ic_kind_name(IcSpec::Kind k) {
  switch (k) {
    case IcSpec::Kind::Uniform: return "uniform";
    case IcSpec::Kind::RandomSmooth: return "random_smooth";
    case IcSpec::Kind::SingleMode: return "single_mode";
    case IcSpec::Kind::DomainWall: return "domain_wall";
  }
  return "?";
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Smooth periodic perturbation: sum of the lowest `maxmode` Fourier modes per
// axis with seeded coefficients; amplitude is the per-mode coefficient scale.
void add_random_smooth(Field& f, Rng& rng, double amp, int maxmode) {
  const Grid& g = f.grid();
  for (int c = 0; c < f.ncomp(); ++c) {
    double* p = f.comp(c);
    for (int axis = 0; axis < g.rank; ++axis)
      for (int m = 1; m <= maxmode; ++m) {
        const double ca = amp * rng.uniform(-1.0, 1.0);
        const double sa = amp * rng.uniform(-1.0, 1.0);
        const double w = kTwoPi * m / g.n[axis];
        for (int64_t s = 0; s < g.nsites(); ++s) {
          int cc[3];
          g.coords(s, cc[0], cc[1], cc[2]);
          p[s] += ca * std::cos(w * cc[axis]) + sa * std::sin(w * cc[axis]);
        }
      }
  }
}

CMat base_hermitian(int d, double scale, bool order_param) {
  CMat m(d);
  const cplx I{0.0, 1.0};
  if (d == 2) {
    m.at(0, 0) = 0.6;
    m.at(1, 1) = -0.6;
    m.at(0, 1) = order_param ? cplx(0.1, -0.25) : cplx(0.3, 0.15);
    m.at(1, 0) = std::conj(m.at(0, 1));
  } else if (d == 3) {
    m.at(0, 0) = 0.5;
    m.at(1, 1) = 0.1;
    m.at(2, 2) = -0.6;
    m.at(0, 1) = order_param ? cplx(0.05, 0.2) : cplx(0.2, -0.1);
    m.at(1, 0) = std::conj(m.at(0, 1));
    m.at(0, 2) = cplx(0.0, order_param ? -0.15 : 0.15);
    m.at(2, 0) = std::conj(m.at(0, 2));
  } else {
    m.at(0, 0) = 0.5;
    m.at(1, 1) = 0.2;
    m.at(2, 2) = -0.3;
    m.at(3, 3) = -0.4;
    m.at(0, 1) = order_param ? cplx(0.1, 0.1) : cplx(0.2, 0.0);
    m.at(1, 0) = std::conj(m.at(0, 1));
    m.at(1, 3) = cplx(0.0, order_param ? 0.2 : 0.1);
    m.at(3, 1) = std::conj(m.at(1, 3));
  }
  (void)I;
  return m * scale;
}

void make_traceless(Field& f, int d) {
  const int64_t ns = f.nsites();
  for (int64_t s = 0; s < ns; ++s) {
    double tr = 0.0;
    for (int i = 0; i < d; ++i) tr += f.at(cm_re(d, i, i), s);
    tr /= d;
    for (int i = 0; i < d; ++i) f.at(cm_re(d, i, i), s) -= tr;
  }
}

// Hermitian smooth random field: perturb the independent components.
void fill_matrix_field(Field& f, int d, const CMat& base, Rng& rng, double amp, int maxmode,
                       bool perturb) {
  const Grid& g = f.grid();
  for (int64_t s = 0; s < g.nsites(); ++s) store_cmat(f, d, s, base);
  if (!perturb) return;
  // Independent Hermitian components as scratch planes.
  Field scratch(g, d * d);
  add_random_smooth(scratch, rng, amp, maxmode);
  for (int64_t s = 0; s < g.nsites(); ++s) {
    int c = 0;
    for (int i = 0; i < d; ++i, ++c) f.at(cm_re(d, i, i), s) += scratch.at(c, s);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        double re = scratch.at(c++, s);
        double im = scratch.at(c++, s);
        f.at(cm_re(d, i, j), s) += re;
        f.at(cm_im(d, i, j), s) += im;
        f.at(cm_re(d, j, i), s) += re;
        f.at(cm_im(d, j, i), s) -= im;
      }
  }
  make_traceless(f, d);
}

RMat rodrigues(const double w[3]) {
  RMat r = RMat::identity(3);
  double th = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  if (th < 1e-300) return r;
  double k[3] = {w[0] / th, w[1] / th, w[2] / th};
  RMat kx(3);
  kx.at(0, 1) = -k[2];
  kx.at(1, 0) = k[2];
  kx.at(0, 2) = k[1];
  kx.at(2, 0) = -k[1];
  kx.at(1, 2) = -k[0];
  kx.at(2, 1) = k[0];
  RMat kx2 = kx * kx;
  return r + kx * std::sin(th) + kx2 * (1.0 - std::cos(th));
}

void fill_vec3(Field& f, const double base[3], Rng& rng, double amp, int maxmode,
               bool perturb, bool normalize) {
  for (int64_t s = 0; s < f.nsites(); ++s) store_vec3(f, s, base);
  if (perturb) add_random_smooth(f, rng, amp, maxmode);
  if (normalize) {
    for (int64_t s = 0; s < f.nsites(); ++s) {
      double v[3];
      load_vec3(f, s, v);
      double nrm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (nrm < 1e-12) throw std::invalid_argument("ic: unit vector collapsed to zero");
      for (double& x : v) x /= nrm;
      store_vec3(f, s, v);
    }
  }
}

void fill_sym3(Field& f, const double base[6], Rng& rng, double amp, int maxmode,
               bool perturb, bool traceless) {
  for (int64_t s = 0; s < f.nsites(); ++s)
    for (int c = 0; c < 6; ++c) f.at(c, s) = base[c];
  if (perturb) add_random_smooth(f, rng, amp, maxmode);
  if (traceless) {
    for (int64_t s = 0; s < f.nsites(); ++s) {
      double tr = (f.at(0, s) + f.at(1, s) + f.at(2, s)) / 3.0;
      for (int c = 0; c < 3; ++c) f.at(c, s) -= tr;
    }
  }
}

void fill_plain(Field& f, const std::vector<double>& base, Rng& rng, double amp,
                int maxmode, bool perturb) {
  for (int64_t s = 0; s < f.nsites(); ++s)
    for (int c = 0; c < f.ncomp(); ++c) f.at(c, s) = base[c];
  if (perturb) add_random_smooth(f, rng, amp, maxmode);
}

}  // namespace

SimState make_initial_state(const Model& m, const Grid& g, const IcSpec& ic) {
  m.validate();
  SimState st = make_state(m, g);
  Rng rng(ic.seed);
  const bool perturb = ic.kind == IcSpec::Kind::RandomSmooth;
  const double amp = ic.amplitude;
  const int maxmode = std::max(1, ic.mode);

  if (ic.kind == IcSpec::Kind::SingleMode || ic.kind == IcSpec::Kind::DomainWall) {
    if (m.case_id != CaseId::LlHeisenberg)
      throw std::invalid_argument("ic: " + ic_kind_name(ic.kind) +
                                  " is defined for LL_HEISENBERG only");
    Field& s = st.field(FieldId::S);
    const double w = kTwoPi * ic.mode / g.n[0];
    for (int64_t site = 0; site < g.nsites(); ++site) {
      int cc[3];
      g.coords(site, cc[0], cc[1], cc[2]);
      double v[3];
      if (ic.kind == IcSpec::Kind::SingleMode) {
        v[0] = amp * std::cos(w * cc[0]);
        v[1] = amp * std::sin(w * cc[0]);
        v[2] = ic.base;
      } else {
        const double L = g.n[0];
        const double delta = L / 16.0;
        double theta = 3.14159265358979323846 *
                       (std::tanh((cc[0] - L / 4.0) / delta) -
                        std::tanh((cc[0] - 3.0 * L / 4.0) / delta));
        v[0] = ic.base * std::sin(theta);
        v[1] = 0.0;
        v[2] = ic.base * std::cos(theta);
      }
      store_vec3(s, site, v);
    }
    validate_state(st, m);
    return st;
  }

  for (auto& kv : st.fields) {
    Field& f = kv.second;
    switch (kv.first) {
      case FieldId::G:
        fill_matrix_field(f, m.dim(), base_hermitian(m.dim(), ic.base, false), rng, amp,
                          maxmode, perturb);
        break;
      case FieldId::Aord:
        fill_matrix_field(f, m.dim(), base_hermitian(m.dim(), 0.8 * ic.base, true), rng,
                          amp, maxmode, perturb);
        break;
      case FieldId::S: {
        double base[3] = {0.0, 0.0, ic.base};
        fill_vec3(f, base, rng, amp, maxmode, perturb, false);
        break;
      }
      case FieldId::U: {
        double base[3] = {0.6 * ic.base, 0.0, 0.3 * ic.base};
        fill_vec3(f, base, rng, amp, maxmode, perturb, false);
        break;
      }
      case FieldId::N: {
        double base[3] = {ic.base, 0.0, 0.0};
        fill_vec3(f, base, rng, amp, maxmode, perturb, true);
        break;
      }
      case FieldId::Rmat: {
        // Smooth rotation field R(x) = exp([w(x)]x) R0.
        double axis[3] = {1.0, 2.0, 3.0};
        double nrm = std::sqrt(14.0);
        for (double& x : axis) x *= 0.5 * ic.base / nrm;
        RMat r0 = rodrigues(axis);
        Field wfield(g, 3);
        if (perturb) add_random_smooth(wfield, rng, amp, maxmode);
        for (int64_t s = 0; s < g.nsites(); ++s) {
          double w[3];
          load_vec3(wfield, s, w);
          store_mat3(f, s, rodrigues(w) * r0);
        }
        break;
      }
      case FieldId::Q: {
        double base[6] = {0.4 * ic.base, -0.1 * ic.base, -0.3 * ic.base,
                          0.2 * ic.base, 0.0, 0.1 * ic.base};
        fill_sym3(f, base, rng, amp, maxmode, perturb, true);
        break;
      }
      case FieldId::W: {
        double base[6] = {0.5 * ic.base, -0.2 * ic.base, -0.3 * ic.base,
                          0.15 * ic.base, 0.1 * ic.base, 0.0};
        fill_sym3(f, base, rng, amp, maxmode, perturb, false);
        break;
      }
      case FieldId::Sigma:
        fill_plain(f, {0.5 * ic.base, 0.0, 0.2 * ic.base, 0.1 * ic.base, 0.0,
                       0.4 * ic.base},
                   rng, amp, maxmode, perturb);
        break;
      case FieldId::Gamma5:
        fill_plain(f, {0.3 * ic.base}, rng, amp, maxmode, perturb);
        break;
      case FieldId::Gamma:
        fill_plain(f, {0.4 * ic.base, 0.0, 0.2 * ic.base, -0.1 * ic.base}, rng, amp,
                   maxmode, perturb);
        break;
      case FieldId::Gbar:
        fill_plain(f, {0.1 * ic.base, 0.3 * ic.base, 0.0, 0.2 * ic.base}, rng, amp,
                   maxmode, perturb);
        break;
      case FieldId::GammaA:
        fill_plain(f, {0.3 * ic.base, -0.2 * ic.base, 0.1 * ic.base, 0.0, 0.25 * ic.base},
                   rng, amp, maxmode, perturb);
        break;
      case FieldId::GammaAb: {
        std::vector<double> base(10, 0.0);
        base[0] = 0.4 * ic.base;   // (1,2)
        base[4] = -0.2 * ic.base;  // (2,3)
        base[7] = 0.3 * ic.base;   // (3,4)
        base[9] = 0.15 * ic.base;  // (4,5)
        fill_plain(f, base, rng, amp, maxmode, perturb);
        break;
      }
      case FieldId::GAnti: {
        std::vector<double> base(f.ncomp(), 0.0);
        base[0] = 0.4 * ic.base;
        base[f.ncomp() - 1] = -0.25 * ic.base;
        fill_plain(f, base, rng, amp, maxmode, perturb);
        break;
      }
    }
  }
  validate_state(st, m);
  return st;
}

void validate_state(const SimState& st, const Model& m) {
  for (auto [id, nc] : m.required_fields()) {
    const Field& f = st.field(id);
    if (f.ncomp() != nc)
      throw std::invalid_argument("state: field " + field_name(id) +
                                  " has wrong component count");
    if (!(f.grid() == st.grid))
      throw std::invalid_argument("state: field " + field_name(id) + " grid mismatch");
  }
  if (st.has(FieldId::Rmat)) {
    const Field& f = st.field(FieldId::Rmat);
    for (int64_t s = 0; s < f.nsites(); ++s) {
      RMat r = load_mat3(f, s);
      RMat d = r.transpose() * r - RMat::identity(3);
      double frob = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) frob += d.at(i, j) * d.at(i, j);
      if (std::sqrt(frob) > 1e-8)
        throw std::invalid_argument("state: R not orthogonal at load");
    }
  }
  for (FieldId id : {FieldId::G, FieldId::Aord}) {
    if (!st.has(id)) continue;
    const Field& f = st.field(id);
    const int d = m.dim();
    for (int64_t s = 0; s < f.nsites(); ++s)
      if (load_cmat(f, d, s).herm_defect() > 1e-10)
        throw std::invalid_argument("state: " + field_name(id) + " not Hermitian at load");
  }
}

}  // namespace liemag
