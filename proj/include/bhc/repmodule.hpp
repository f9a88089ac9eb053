#ifndef BHC_REPMODULE_HPP
#define BHC_REPMODULE_HPP

#include "bhc/algebra.hpp"
#include "bhc/superalgebra.hpp"

namespace bhc {

// Conformal module datum over an Algebra: module basis with parities, the
// intertwining maps phi/psi, and the action table rho[i][u] = value of
// (algebra generator i) acting on (module generator u), an arity-1 LValue
// over the module basis.
struct RepModule {
  std::vector<std::string> names;
  std::vector<Parity> parity;
  EndoMap phi, psi;
  std::vector<std::vector<LValue>> rho;

  size_t rank() const { return names.size(); }
  Element unit(size_t u) const { return Element::unit(rank(), u); }
  bool is_regular() const { return phi.is_regular() && psi.is_regular(); }
  int max_table_degree() const;
};

// Sesquilinear extension of the action: left lives over the algebra
// basis, right over the module basis.
LValue module_act(const RepModule& M, const LValue& r, const LValue& v, int slot);
LValue module_act(const RepModule& M, const Element& r, const Element& v, int slot = 1);

// Verifies evenness/commutation of phi and psi, grading of the action
// table, sesquilinearity, the phi/psi intertwining laws and the twisted
// composition law, per basis tuple.
CheckReport check_module(const Algebra& A, const RepModule& M, int slot0 = 1);

// The algebra acting on itself through its own bracket.
RepModule adjoint_module(const Algebra& A);

// Zero action with prescribed maps (any commuting even pair works).
RepModule trivial_module(const Algebra& A, std::vector<std::string> names,
                         std::vector<Parity> parity, EndoMap phi, EndoMap psi);

// Free conformal module over the current-style algebra of g, induced from
// a finite representation: the action table is the constant matrix datum.
RepModule current_module(const SuperRep& rep);

} // namespace bhc

#endif
