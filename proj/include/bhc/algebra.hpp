#ifndef BHC_ALGEBRA_HPP
#define BHC_ALGEBRA_HPP

#include "bhc/element.hpp"
#include "bhc/endomap.hpp"
#include "bhc/polymod.hpp"

#include <string>
#include <vector>

namespace bhc {

// Sesquilinear evaluation of a pair table.  `table[i][j]` is the value on
// (left generator i, right generator j): an arity-1 LValue in x1 and d
// over the output basis.  Left coefficients are evaluated at d -> -slot,
// right coefficients are shifted d -> d + slot, the table slot is renamed
// to `slot`.  This is the one place the conformal extension rules
//   [d a_l b] = -l [a_l b],   [a_l d b] = (d + l) [a_l b]
// are implemented; everything else goes through here.
LValue conf_eval_pair(const std::vector<std::vector<LValue>>& table, size_t out_rank,
                      const LValue& left, const LValue& right, int slot);

// Shared data of a finite conformal structure given by a table: basis
// names and parities, the two structure maps, and one arity-1 LValue per
// ordered generator pair.
struct ConformalTable {
  std::vector<std::string> names;
  std::vector<Parity> parity;
  EndoMap alpha, beta;
  std::vector<std::vector<LValue>> table;

  size_t rank() const { return names.size(); }
  Element unit(size_t i) const { return Element::unit(rank(), i); }
  LValue zero_value(int arity = 1) const { return LValue(arity, rank()); }
  int index_of(const std::string& name) const; // -1 if unknown
  int max_table_degree() const;

  LValue eval(const Element& a, const Element& b, int slot = 1) const;
  LValue eval(const LValue& a, const LValue& b, int slot) const;
};

// Lambda-bracket table expected to satisfy the BiHom-Lie conformal
// superalgebra axioms.
struct Algebra : ConformalTable {
  bool is_regular() const { return alpha.is_regular() && beta.is_regular(); }
};

// Lambda-product table expected to satisfy BiHom-associativity.
struct AssocConformal : ConformalTable {};

struct Violation {
  std::string axiom;
  std::vector<std::string> where; // basis tuple
  LValue residual;                // normalized slots, never zero
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(const std::string& axiom, std::vector<std::string> where, const LValue& residual);
};

// Bilinear sesquilinear extension of the bracket table.
LValue eval_bracket(const Algebra& A, const Element& a, const Element& b, int slot = 1);

// Brackets an element into an already computed value: [a_slot v].
LValue eval_into(const Algebra& A, const Element& a, const LValue& v, int slot);

// Brackets a value into an element: [v_slot b].
LValue eval_from(const Algebra& A, const LValue& v, const Element& b, int slot);

// n-th product a_(n) b = n! * (coefficient of x^n in [a_x b]); zero for
// negative n.
Element nth_product(const Algebra& A, const Element& a, const Element& b, int n);

// Verifies evenness and commutation of the structure maps, their
// multiplicativity, the grading of the table, sesquilinearity of the
// evaluator, BiHom skew-symmetry and the BiHom-Jacobi identity, on basis
// generators (bilinearity and sesquilinearity make this sufficient).
// Failures are reported as data, with the residual per basis tuple.
CheckReport check_algebra(const Algebra& A, int slot0 = 1);

// Same structural checks with BiHom-associativity in place of
// skew-symmetry and Jacobi.
CheckReport check_associative(const AssocConformal& A, int slot0 = 1);

// U = Q[d]-span of gens; true iff alpha(U), beta(U) and every lambda
// coefficient of [u_l v] (u, v generators of U) land back in U.
bool is_subalgebra(const Algebra& A, const std::vector<Element>& gens);

// Left ideal: u ranges over the whole algebra basis instead.
bool is_ideal(const Algebra& A, const std::vector<Element>& gens);

} // namespace bhc

#endif
