#include "liemag/grid.hpp"

#include <cmath>

namespace liemag {

bool Field::finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

void check_stencil_pre(const Grid& g) {
  for (int a = 0; a < g.rank; ++a)
    if (g.n[a] < 3)
      throw std::invalid_argument("stencil: need at least 3 points per active axis");
}

void check_axis(const Grid& g, int axis) {
  if (axis < 0 || axis >= g.rank) throw std::invalid_argument("stencil: invalid axis");
}

}  // namespace

void laplacian_into(Field& out, const Field& f) {
  const Grid& g = f.grid();
  check_stencil_pre(g);
  const int64_t ns = g.nsites();
  const int nc = f.ncomp();
  for (int c = 0; c < nc; ++c) {
    const double* in = f.comp(c);
    double* o = out.comp(c);
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t s = 0; s < ns; ++s) {
      int ci, cj, ck;
      g.coords(s, ci, cj, ck);
      int cc[3] = {ci, cj, ck};
      double acc = 0.0;
      for (int a = 0; a < g.rank; ++a) {
        const int na = g.n[a];
        int saved = cc[a];
        int p = saved + 1 == na ? 0 : saved + 1;
        int m = saved == 0 ? na - 1 : saved - 1;
        cc[a] = p;
        double vp = in[g.index(cc[0], cc[1], cc[2])];
        cc[a] = m;
        double vm = in[g.index(cc[0], cc[1], cc[2])];
        cc[a] = saved;
        acc += (vp - 2.0 * in[s] + vm) / (g.h[a] * g.h[a]);
      }
      o[s] = acc;
    }
  }
}

Field laplacian(const Field& f) {
  Field out = Field::zeros_like(f);
  laplacian_into(out, f);
  return out;
}

namespace {

enum class DiffKind { Central, Forward, Backward };

Field diff(const Field& f, int axis, DiffKind kind) {
  const Grid& g = f.grid();
  check_stencil_pre(g);
  check_axis(g, axis);
  Field out = Field::zeros_like(f);
  const int64_t ns = g.nsites();
  const double invh = 1.0 / g.h[axis];
  for (int c = 0; c < f.ncomp(); ++c) {
    const double* in = f.comp(c);
    double* o = out.comp(c);
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t s = 0; s < ns; ++s) {
      int cc[3];
      g.coords(s, cc[0], cc[1], cc[2]);
      const int na = g.n[axis];
      int saved = cc[axis];
      int p = saved + 1 == na ? 0 : saved + 1;
      int m = saved == 0 ? na - 1 : saved - 1;
      switch (kind) {
        case DiffKind::Central: {
          cc[axis] = p;
          double vp = in[g.index(cc[0], cc[1], cc[2])];
          cc[axis] = m;
          double vm = in[g.index(cc[0], cc[1], cc[2])];
          o[s] = 0.5 * invh * (vp - vm);
          break;
        }
        case DiffKind::Forward: {
          cc[axis] = p;
          double vp = in[g.index(cc[0], cc[1], cc[2])];
          o[s] = invh * (vp - in[s]);
          break;
        }
        case DiffKind::Backward: {
          cc[axis] = m;
          double vm = in[g.index(cc[0], cc[1], cc[2])];
          o[s] = invh * (in[s] - vm);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

Field gradient(const Field& f, int axis) { return diff(f, axis, DiffKind::Central); }
Field diff_forward(const Field& f, int axis) { return diff(f, axis, DiffKind::Forward); }
Field diff_backward(const Field& f, int axis) { return diff(f, axis, DiffKind::Backward); }

namespace {
Field divergence_impl(const std::vector<Field>& flux, DiffKind kind) {
  if (flux.empty()) throw std::invalid_argument("divergence: no flux fields");
  const Grid& g = flux[0].grid();
  if (static_cast<int>(flux.size()) != g.rank)
    throw std::invalid_argument("divergence: one flux field per axis required");
  for (const Field& f : flux)
    if (!(f.grid() == g) || f.ncomp() != flux[0].ncomp())
      throw std::invalid_argument("divergence: flux shape mismatch");
  Field out(g, flux[0].ncomp());
  for (int a = 0; a < g.rank; ++a) {
    Field d = diff(flux[a], a, kind);
    axpy(out, 1.0, d);
  }
  return out;
}
}  // namespace

Field divergence_central(const std::vector<Field>& flux) {
  return divergence_impl(flux, DiffKind::Central);
}

Field divergence_adjoint(const std::vector<Field>& flux) {
  return divergence_impl(flux, DiffKind::Backward);
}

double pairwise_sum(const double* v, int64_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (int64_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  int64_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

std::vector<double> volume_integral(const Field& f) {
  std::vector<double> out(f.ncomp());
  const double vol = f.grid().cell_volume();
  for (int c = 0; c < f.ncomp(); ++c) out[c] = vol * pairwise_sum(f.comp(c), f.nsites());
  return out;
}

void axpy(Field& y, double a, const Field& x) {
  if (!(y.grid() == x.grid()) || y.ncomp() != x.ncomp())
    throw std::invalid_argument("axpy: shape mismatch");
  double* yd = y.raw().data();
  const double* xd = x.raw().data();
  const int64_t n = static_cast<int64_t>(y.raw().size());
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t i = 0; i < n; ++i) yd[i] += a * xd[i];
}

void rk4_combine(Field& y, const Field& x0, double dt, const Field& k1, const Field& k2,
                 const Field& k3, const Field& k4) {
  double* yd = y.raw().data();
  const double* x = x0.raw().data();
  const double* a = k1.raw().data();
  const double* b = k2.raw().data();
  const double* c = k3.raw().data();
  const double* d = k4.raw().data();
  const int64_t n = static_cast<int64_t>(y.raw().size());
  const double w = dt / 6.0;
#ifdef LIEMAG_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t i = 0; i < n; ++i) yd[i] = x[i] + w * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);
}

}  // namespace liemag
