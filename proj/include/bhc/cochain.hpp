#ifndef BHC_COCHAIN_HPP
#define BHC_COCHAIN_HPP

#include "bhc/ansatz.hpp"
#include "bhc/repmodule.hpp"

namespace bhc {

// n-cochain datum: one module-valued LValue in slots x1..xn per n-tuple
// of algebra generators (a single module element for n = 0), plus the
// parity of the map.  Conformal antilinearity is built into evaluation;
// the skew and commutativity constraints are validated by
// cochain_residuals and imposed by the solver.
struct Cochain {
  int arity = 0;
  Parity parity = Parity::even;
  size_t alg_rank = 0;
  std::vector<LValue> table;

  size_t mod_rank() const { return table.empty() ? 0 : table[0].rank(); }
  size_t tuple_count() const { return table.size(); }
  size_t flat_index(const std::vector<size_t>& tuple) const;
  std::vector<size_t> tuple_of(size_t flat) const;
  bool is_zero() const;

  Cochain& operator+=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  Cochain& operator*=(const Poly& p);
};

Cochain zero_cochain(const Algebra& A, const RepModule& M, int n, Parity theta);
Cochain cochain_from_element(const Algebra& A, const RepModule& M, const Element& m,
                             Parity theta);

// gamma_{slots}(args): argument t is a value over the algebra basis whose
// coefficients are evaluated at d -> -x_{slots[t]} (conformal
// antilinearity); the stored slots are renamed to slots[].
LValue eval_cochain(const Cochain& g, const std::vector<LValue>& args,
                    const std::vector<int>& slots);
LValue eval_cochain(const Cochain& g, const std::vector<Element>& args);

// Sign, power and twist choices the differential display leaves
// ambiguous; the default is the literal reading, and check_d_squared is
// the arbiter.
struct DiffConvention {
  bool first_sign_split = false;   // (-1)^{(|g|+A_i)|a_i|} vs (-1)^{|g||a_i| + A_i}
  bool power_full = false;         // alpha beta^{n-1} vs alpha beta^n
  bool second_sum_gamma = false;   // extra (-1)^{|g|(|a_i|+|a_j|)} in the bracket sum
  bool first_sum_beta_args = false; // beta on the action sum's remaining arguments
  // d on 0-cochains: the bare action rho(a)_x g, or the n = 0 instance of
  // the general action sum, (-1)^{|g||a|} rho(alpha beta^-1(a))_x g.
  bool zero_rule_general = false;
  bool operator==(const DiffConvention&) const = default;
};

std::string convention_name(const DiffConvention& cv);

// The differential: for 0-cochains (dg)_x(a) = rho(a)_x g; in general the
// action sum plus the bracket-contraction sum with Koszul signs.
// Requires a regular algebra (alpha is inverted).
Cochain differential(const Algebra& A, const RepModule& M, const Cochain& g,
                     const DiffConvention& cv = {});

// Residuals of the three cochain conditions on stored data (parity
// support, alpha/beta commutativity, skew-symmetry).  For n = 0 only the
// parity support applies.
CheckReport cochain_residuals(const Algebra& A, const RepModule& M, const Cochain& g);

// Residual of d(d g) per basis tuple.
CheckReport check_d_squared(const Algebra& A, const RepModule& M, const Cochain& g,
                            const DiffConvention& cv = {});

// Exact basis of the space of n-cochains of parity theta whose table
// polynomials have total degree <= deg.  For n = 0 the commutativity
// conditions pin the element under phi and psi.
std::vector<Cochain> solve_cochain_space(const Algebra& A, const RepModule& M, int n,
                                         Parity theta, int deg);

// Parameter-generic member of the degree-bounded cochain space: the span
// of `basis` with one fresh parameter per member.
Cochain cochain_span_generic(const std::vector<Cochain>& basis, ParamPool& pool);

// Exact basis of the degree-bounded cocycle slice: cochain constraints
// plus d(gamma) = 0.
std::vector<Cochain> solve_cocycles(const Algebra& A, const RepModule& M, int n,
                                    Parity theta, int deg, const DiffConvention& cv = {});

struct CohomologyReport {
  int n = 0;
  Parity theta = Parity::even;
  int degree = 0;
  int ambient_degree = 0;
  size_t cocycle_dim = 0;          // cocycles of degree <= degree
  size_t coboundary_dim = 0;       // d of (n-1)-cochains of degree <= degree
  size_t ambient_cocycle_dim = 0;  // cocycles of degree <= ambient_degree
  size_t indicator_dim = 0;        // ambient_cocycle_dim - coboundary_dim
};

// Exact dimensions of the degree-truncated cocycle and coboundary slices;
// the indicator is the honest bounded-degree stand-in for cohomology.
CohomologyReport truncated_cohomology_report(const Algebra& A, const RepModule& M, int n,
                                             Parity theta, int deg,
                                             const DiffConvention& cv = {});

struct ConventionSearch {
  DiffConvention convention;
  bool literal_ok = false; // the literal reading already satisfies d^2 = 0
  bool found = false;
};

// Tries the literal convention first, then the finite variant set, until
// d(d gamma) vanishes identically for a generic symbolic 0-cochain and a
// generic 1-cochain ansatz of the given degree, both parities.
ConventionSearch resolve_convention(const Algebra& A, const RepModule& M, int deg);

} // namespace bhc

#endif
