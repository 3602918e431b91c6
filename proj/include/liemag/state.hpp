#pragma once

// SimState: the named fields a case evolves, plus time/step metadata, and the
// per-site gather/scatter helpers the kernels use. Storage layouts:
//   complex matrix  : comp 2(i*d+j) = Re g_ij, 2(i*d+j)+1 = Im g_ij
//   symmetric 3x3   : comps (11, 22, 33, 12, 13, 23)
//   antisymmetric n : upper-triangle pairs in lexicographic order
//   rotation 3x3    : row-major

#include <cstdint>
#include <utility>
#include <vector>

#include "liemag/grid.hpp"
#include "liemag/model.hpp"
#include "liemag/rng.hpp"
#include "liemag/smallmat.hpp"

namespace liemag {

struct SimState {
  double time = 0.0;
  int64_t step = 0;
  Grid grid;
  std::vector<std::pair<FieldId, Field>> fields;

  bool has(FieldId id) const;
  Field& field(FieldId id);
  const Field& field(FieldId id) const;
  bool finite() const;
};

// Zero-initialized state carrying the case's required fields.
SimState make_state(const Model& m, const Grid& g);

// --------------------------------------------------------------------------
// Per-site access helpers
// --------------------------------------------------------------------------

inline int cm_re(int d, int i, int j) { return 2 * (i * d + j); }
inline int cm_im(int d, int i, int j) { return 2 * (i * d + j) + 1; }

inline CMat load_cmat(const Field& f, int d, int64_t s) {
  CMat m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.at(i, j) = cplx(f.at(cm_re(d, i, j), s), f.at(cm_im(d, i, j), s));
  return m;
}

inline void store_cmat(Field& f, int d, int64_t s, const CMat& m) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      f.at(cm_re(d, i, j), s) = m.at(i, j).real();
      f.at(cm_im(d, i, j), s) = m.at(i, j).imag();
    }
}

inline void load_vec3(const Field& f, int64_t s, double v[3]) {
  v[0] = f.at(0, s);
  v[1] = f.at(1, s);
  v[2] = f.at(2, s);
}

inline void store_vec3(Field& f, int64_t s, const double v[3]) {
  f.at(0, s) = v[0];
  f.at(1, s) = v[1];
  f.at(2, s) = v[2];
}

// Symmetric 3x3 <-> 6 comps (11, 22, 33, 12, 13, 23).
inline RMat load_sym3(const Field& f, int64_t s) {
  RMat m(3);
  m.at(0, 0) = f.at(0, s);
  m.at(1, 1) = f.at(1, s);
  m.at(2, 2) = f.at(2, s);
  m.at(0, 1) = m.at(1, 0) = f.at(3, s);
  m.at(0, 2) = m.at(2, 0) = f.at(4, s);
  m.at(1, 2) = m.at(2, 1) = f.at(5, s);
  return m;
}

inline void store_sym3(Field& f, int64_t s, const RMat& m) {
  f.at(0, s) = m.at(0, 0);
  f.at(1, s) = m.at(1, 1);
  f.at(2, s) = m.at(2, 2);
  f.at(3, s) = 0.5 * (m.at(0, 1) + m.at(1, 0));
  f.at(4, s) = 0.5 * (m.at(0, 2) + m.at(2, 0));
  f.at(5, s) = 0.5 * (m.at(1, 2) + m.at(2, 1));
}

inline RMat load_mat3(const Field& f, int64_t s) {
  RMat m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = f.at(3 * i + j, s);
  return m;
}

inline void store_mat3(Field& f, int64_t s, const RMat& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f.at(3 * i + j, s) = m.at(i, j);
}

// Antisymmetric n x n <-> upper-triangle comps in lexicographic pair order.
inline int asym_ncomp(int n) { return n * (n - 1) / 2; }
int asym_pair_index(int n, int i, int j);  // i < j

inline RMat load_asym(const Field& f, int n, int64_t s) {
  RMat m(n);
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++c) {
      m.at(i, j) = f.at(c, s);
      m.at(j, i) = -f.at(c, s);
    }
  return m;
}

inline void store_asym(Field& f, int n, int64_t s, const RMat& m) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++c) f.at(c, s) = 0.5 * (m.at(i, j) - m.at(j, i));
}

// --------------------------------------------------------------------------
// Initial conditions
// --------------------------------------------------------------------------

struct IcSpec {
  enum class Kind { Uniform, RandomSmooth, SingleMode, DomainWall };
  Kind kind = Kind::RandomSmooth;
  double base = 1.0;       // uniform background scale
  double amplitude = 0.1;  // perturbation scale
  int mode = 1;            // highest mode (RandomSmooth) or mode index (SingleMode)
  uint64_t seed = 1;
};

IcSpec::Kind ic_kind_from_name(const std::string& name);
std::string ic_kind_name(IcSpec::Kind k);

// Builds the case's initial state. Random perturbations preserve structural
// constraints (Hermitian traceless matrices, orthogonal R, unit n, symmetric
// tensors); reproducible via the documented splitmix64 stream.
SimState make_initial_state(const Model& m, const Grid& g, const IcSpec& ic);

// Checks the load-time contracts: required fields present with the right
// component counts, R orthogonal to 1e-8, matrix fields Hermitian.
void validate_state(const SimState& st, const Model& m);

}  // namespace liemag
