#pragma once

// Periodic D-dimensional lattice (D = 1..3) of multi-component real fields,
// stored structure-of-arrays: one contiguous plane per real component.
//
// Stencil conventions. The gradient-energy terms and all flux densities use
// the forward difference D+, functional derivatives use its discrete adjoint
// -D-, and their composition D-D+ is the standard 3-point Laplacian. With
// this pairing the charge continuity identity rhs = -div(flux) and the
// telescoping of volume sums hold to roundoff, not just to stencil order.
// A central first difference is also provided for measurement use.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liemag {

struct Grid {
  int rank = 1;
  std::array<int, 3> n{1, 1, 1};
  std::array<double, 3> h{1.0, 1.0, 1.0};

  Grid() = default;
  Grid(int rank_, std::array<int, 3> extents, std::array<double, 3> spacing)
      : rank(rank_), n(extents), h(spacing) {
    if (rank < 1 || rank > 3) throw std::invalid_argument("Grid: rank must be 1..3");
    for (int a = rank; a < 3; ++a) {
      n[a] = 1;
      h[a] = 1.0;
    }
    for (int a = 0; a < rank; ++a)
      if (n[a] < 1) throw std::invalid_argument("Grid: extents must be positive");
  }

  int64_t nsites() const { return int64_t(n[0]) * n[1] * n[2]; }
  double cell_volume() const { return h[0] * h[1] * h[2]; }

  int64_t index(int i, int j, int k) const { return (int64_t(k) * n[1] + j) * n[0] + i; }

  void coords(int64_t s, int& i, int& j, int& k) const {
    i = static_cast<int>(s % n[0]);
    int64_t r = s / n[0];
    j = static_cast<int>(r % n[1]);
    k = static_cast<int>(r / n[1]);
  }

  // Periodic neighbor along axis; step is +1 or -1.
  int64_t neighbor(int64_t s, int axis, int step) const {
    int c[3];
    coords(s, c[0], c[1], c[2]);
    int v = c[axis] + step;
    if (v < 0) v += n[axis];
    if (v >= n[axis]) v -= n[axis];
    c[axis] = v;
    return index(c[0], c[1], c[2]);
  }

  bool operator==(const Grid& o) const { return rank == o.rank && n == o.n && h == o.h; }
};

class Field {
 public:
  Field() = default;
  Field(const Grid& g, int ncomp) : grid_(g), ncomp_(ncomp) {
    data_.assign(static_cast<size_t>(ncomp) * g.nsites(), 0.0);
  }

  static Field zeros_like(const Field& o) { return Field(o.grid_, o.ncomp_); }

  const Grid& grid() const { return grid_; }
  int ncomp() const { return ncomp_; }
  int64_t nsites() const { return grid_.nsites(); }

  double* comp(int c) { return data_.data() + static_cast<size_t>(c) * grid_.nsites(); }
  const double* comp(int c) const {
    return data_.data() + static_cast<size_t>(c) * grid_.nsites();
  }

  double& at(int c, int64_t s) { return data_[static_cast<size_t>(c) * grid_.nsites() + s]; }
  double at(int c, int64_t s) const {
    return data_[static_cast<size_t>(c) * grid_.nsites() + s];
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }

  bool finite() const;
  double max_abs() const;

 private:
  Grid grid_;
  int ncomp_ = 0;
  std::vector<double> data_;
};

// All calculus ops allocate their result; *_into variants write in place.

void laplacian_into(Field& out, const Field& f);
Field laplacian(const Field& f);

// Second-order central difference along `axis`.
Field gradient(const Field& f, int axis);

// Forward / backward first differences (link-based pair).
Field diff_forward(const Field& f, int axis);
Field diff_backward(const Field& f, int axis);

// Sum over axes of central gradients (general-purpose divergence).
Field divergence_central(const std::vector<Field>& flux);
// Sum over axes of backward differences: exact adjoint divergence for
// forward-difference link fluxes.
Field divergence_adjoint(const std::vector<Field>& flux);

// Deterministic pairwise (fixed-tree) reduction; bit-reproducible.
double pairwise_sum(const double* v, int64_t n);

// Integral of each component: pairwise site sum times cell volume.
std::vector<double> volume_integral(const Field& f);

// y += a * x (same shape).
void axpy(Field& y, double a, const Field& x);
// y = x0 + a*(k1 + 2k2 + 2k3 + k4)/6 convenience for the integrator.
void rk4_combine(Field& y, const Field& x0, double dt, const Field& k1, const Field& k2,
                 const Field& k3, const Field& k4);

}  // namespace liemag
