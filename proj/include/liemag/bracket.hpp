#pragma once

// Poisson bracket algebras as structure-constant tables.
//
// Every bracket in scope is ultralocal and linear:
//   {phi_a(x), phi_b(x')} = delta(x - x') sum_c f_abc phi_c(x).
//
// Component tables are not copied from the component formulas; they are
// derived from the master brackets
//   i{g_ab, g_cd} = g_cb d_ad - g_ad d_cb      (generator sector)
//   i{a_ab, g_cd} = a_cb d_ad - a_ad d_cb      (order-parameter sector)
//   {a, a} = 0
// by writing each variable as a linear functional of the matrix entries and
// re-expressing the bracket in the variable span. Published component forms
// are retained as reference fixtures and compared against the derived
// constants; disagreements are reported, never silently absorbed.

#include <optional>
#include <string>
#include <vector>

#include "liemag/basis.hpp"
#include "liemag/rng.hpp"
#include "liemag/smallmat.hpp"

namespace liemag {

// A real-valued linear functional v = sum C_ab g_ab + sum D_ab a_ab.
// C and D must be Hermitian so that v is real on Hermitian fields.
struct VarDef {
  std::string label;
  CMat coef_g;  // zero-dim CMat means "no g part"
  CMat coef_a;
  // Optional reconstruction duals: g = sum_a v_a dual_g_a (same for a).
  CMat dual_g;
  CMat dual_a;
};

struct Casimir {
  enum class Kind { Poly, TracePowerG, TracePowerA };
  struct Term {
    double coef = 0.0;
    std::vector<int> vars;  // product of variables by index
  };
  std::string name;
  Kind kind = Kind::Poly;
  std::vector<Term> terms;  // Poly only
  int power = 0;            // TracePower only
};

struct BracketTable {
  std::string name;
  int dim = 0;  // matrix dimension behind the variables (0: constructed directly)
  std::vector<VarDef> vars;
  std::vector<double> f;  // dense nv^3, f[(a*nv + b)*nv + c]
  std::vector<Casimir> casimirs;
  double derivation_residual = 0.0;  // worst re-expression (closure) residual

  int nv() const { return static_cast<int>(vars.size()); }
  double fc(int a, int b, int c) const {
    return f[(static_cast<size_t>(a) * nv() + b) * nv() + c];
  }
  double& fc(int a, int b, int c) {
    return f[(static_cast<size_t>(a) * nv() + b) * nv() + c];
  }
  int index_of(const std::string& label) const;

  // r_c = sum_ab A_a B_b f_abc : the bracket of two linear combinations.
  std::vector<double> bracket_combo(const std::vector<double>& a,
                                    const std::vector<double>& b) const;
};

// --------------------------------------------------------------------------
// Derivation engine
// --------------------------------------------------------------------------

// Bracket of two functionals under the master brackets, as a functional pair.
struct FunctionalPair {
  CMat cg;
  CMat ca;
};
FunctionalPair master_bracket(const VarDef& v, const VarDef& w, int dim);

// Derives the table for a variable set. Throws if the set does not close
// within `closure_tol` unless `allow_open` is set (residual recorded).
// With `quotient_traceless` the functionals are taken modulo the identity in
// each sector, i.e. as functionals on traceless matrices; the master bracket
// descends to that quotient since it is built from commutators.
BracketTable derive_table(const std::string& name, int dim, std::vector<VarDef> vars,
                          std::vector<Casimir> casimirs = {}, bool allow_open = false,
                          double closure_tol = 1e-10, bool quotient_traceless = false);

// --------------------------------------------------------------------------
// Shipped tables (derived once, cached)
// --------------------------------------------------------------------------

// Full Hermitian-component table of the generator sector, dim in {2,3,4}.
const BracketTable& master_table(int dim);
// Generator + order-parameter components, dim in {2,3,4}.
const BracketTable& extended_table(int dim);

const BracketTable& pauli_coeff_table();  // s_x, s_y, s_z
const BracketTable& uniaxial_table();     // s, n
const BracketTable& rotor_table();        // s, R (constructed directly)
const BracketTable& spin1_table();        // s, q
const BracketTable& spin1_ext_table();    // s, q, n, w
const BracketTable& spin32_table();       // s, u, v, g44, q
const BracketTable& dirac_table();        // gamma5, gamma, gbar, sigma
const BracketTable& so5_table();          // gamma_a, gamma_ab
const BracketTable& antisym_table(int dim);  // Im g_ab block (closed)

std::vector<const BracketTable*> all_shipped_tables();

// --------------------------------------------------------------------------
// Checks
// --------------------------------------------------------------------------

double antisymmetry_residual(const BracketTable& t);

// Max cyclic-sum residual over all index quadruples.
double jacobi_residual(const BracketTable& t);

// Max |{C, phi_b}| over random variable values in [-1,1], all b, `trials` draws.
double casimir_commutation_residual(const BracketTable& t, const Casimir& c, int trials,
                                    Rng& rng);

// Builds g = i[b,a] from random Hermitian canonical pairs and compares the
// bracket obtained through the canonical pair algebra against the master
// bracket right-hand side. Returns the max deviation.
double canonical_consistency_check(int dim, int trials, Rng& rng);

// --------------------------------------------------------------------------
// Subalgebra restriction
// --------------------------------------------------------------------------

struct SubalgebraResult {
  BracketTable table;
  bool closed = false;
  double leak = 0.0;                   // max |f_abc| escaping the subset
  std::vector<std::string> offenders;  // "a,b -> c" descriptions
};

SubalgebraResult project_subalgebra(const BracketTable& parent,
                                    const std::vector<std::string>& subset);

// Spec-shaped convenience: coefficient variables from an orthogonal basis,
// then restriction to `subset`.
SubalgebraResult project_subalgebra(const BracketTable& /*master*/, const BasisSet& basis,
                                    const std::vector<std::string>& subset);

// --------------------------------------------------------------------------
// Reference component tables (as published) vs derived constants
// --------------------------------------------------------------------------

struct RelationCheck {
  std::string table;
  std::string relation;
  enum class Status { Match, Mismatch, MalformedReference } status;
  double max_diff = 0.0;
  std::string note;
};

std::vector<RelationCheck> compare_reference_relations();

std::string table_to_json(const BracketTable& t);
std::string relation_report_text(const std::vector<RelationCheck>& checks);

}  // namespace liemag
