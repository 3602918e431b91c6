#pragma once

// Dense fixed-capacity matrices for the small generator algebras (dim 2..4
// complex Hermitian, plus real matrices up to 6x6 for component pictures).
// Everything is value-semantic and allocation-free.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace liemag {

using cplx = std::complex<double>;

constexpr int kMaxDim = 4;   // complex generator matrices
constexpr int kMaxRDim = 6;  // real component matrices (so(5), so(6) blocks)

// ---------------------------------------------------------------------------
// CMat: complex n x n matrix, n <= 4, row-major
// ---------------------------------------------------------------------------

class CMat {
 public:
  CMat() : n_(0) { e_.fill(cplx(0.0, 0.0)); }
  explicit CMat(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("CMat: dim must be 1..4");
    e_.fill(cplx(0.0, 0.0));
  }

  static CMat zero(int n) { return CMat(n); }
  static CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }

  cplx& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const cplx& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  CMat operator+(const CMat& o) const {
    check_dim(o);
    CMat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  CMat operator-(const CMat& o) const {
    check_dim(o);
    CMat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  CMat operator*(const CMat& o) const {
    check_dim(o);
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const cplx aik = at(i, k);
        for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }
  CMat operator*(cplx s) const {
    CMat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] * s;
    return r;
  }
  CMat operator*(double s) const { return (*this) * cplx(s, 0.0); }
  CMat& operator+=(const CMat& o) {
    check_dim(o);
    for (int i = 0; i < n_ * n_; ++i) e_[i] += o.e_[i];
    return *this;
  }

  CMat adjoint() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
  }

  CMat transpose() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_ * n_; ++i) m = std::max(m, std::abs(e_[i]));
    return m;
  }

  double frob_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_ * n_; ++i) s += std::norm(e_[i]);
    return std::sqrt(s);
  }

  double herm_defect() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    return m;
  }
  bool is_hermitian(double tol = 1e-12) const { return herm_defect() <= tol; }

  // Projects onto the Hermitian part (g + g^+)/2. Only the integrator's
  // optional projection step should call this on live fields.
  CMat hermitized() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = 0.5 * (at(i, j) + std::conj(at(j, i)));
    return r;
  }

  CMat traceless() const {
    CMat r = *this;
    cplx t = trace() / double(n_);
    for (int i = 0; i < n_; ++i) r.at(i, i) -= t;
    return r;
  }

 private:
  void check_dim(const CMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CMat: dimension mismatch");
  }
  int n_;
  std::array<cplx, kMaxDim * kMaxDim> e_;
};

inline CMat operator*(cplx s, const CMat& m) { return m * s; }
inline CMat operator*(double s, const CMat& m) { return m * s; }

// AB - BA, exact floating point. i*[A,B] is Hermitian for Hermitian A, B.
inline CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

// tr(A^p), p >= 1. Hermitian input gives a real result up to roundoff.
inline cplx trace_power(const CMat& a, int p) {
  if (p < 1) throw std::invalid_argument("trace_power: exponent must be >= 1");
  CMat acc = a;
  for (int k = 1; k < p; ++k) acc = acc * a;
  return acc.trace();
}

// ---------------------------------------------------------------------------
// RMat: real n x n matrix, n <= 6
// ---------------------------------------------------------------------------

class RMat {
 public:
  RMat() : n_(0) { e_.fill(0.0); }
  explicit RMat(int n) : n_(n) {
    if (n < 1 || n > kMaxRDim) throw std::invalid_argument("RMat: dim must be 1..6");
    e_.fill(0.0);
  }

  static RMat zero(int n) { return RMat(n); }
  static RMat identity(int n) {
    RMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }
  double& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const double& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  RMat operator+(const RMat& o) const {
    RMat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  RMat operator-(const RMat& o) const {
    RMat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  RMat operator*(const RMat& o) const {
    RMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const double aik = at(i, k);
        for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }
  RMat operator*(double s) const {
    RMat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] * s;
    return r;
  }

  RMat transpose() const {
    RMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_ * n_; ++i) m = std::max(m, std::abs(e_[i]));
    return m;
  }

 private:
  int n_;
  std::array<double, kMaxRDim * kMaxRDim> e_;
};

inline RMat commutator(const RMat& a, const RMat& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Hermitian split g = g_s + i g_a with both parts real
// ---------------------------------------------------------------------------

struct SymAntisymSplit {
  RMat sym;      // (g_ab + g_ba)/2
  RMat antisym;  // (g_ab - g_ba)/(2i)
};

inline SymAntisymSplit split_sym_antisym(const CMat& g, double herm_tol = 1e-12) {
  if (!g.is_hermitian(herm_tol))
    throw std::invalid_argument("split_sym_antisym: input is not Hermitian within tolerance");
  const int n = g.dim();
  SymAntisymSplit out{RMat(n), RMat(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s = 0.5 * (g.at(i, j) + g.at(j, i));
      cplx a = (g.at(i, j) - g.at(j, i)) / cplx(0.0, 2.0);
      out.sym.at(i, j) = s.real();
      out.antisym.at(i, j) = a.real();
    }
  return out;
}

inline CMat join_sym_antisym(const RMat& s, const RMat& a) {
  const int n = s.dim();
  CMat g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = cplx(s.at(i, j), a.at(i, j));
  return g;
}

}  // namespace liemag
