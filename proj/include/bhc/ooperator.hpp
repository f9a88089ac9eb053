#ifndef BHC_OOPERATOR_HPP
#define BHC_OOPERATOR_HPP

#include "bhc/errors.hpp"
#include "bhc/repmodule.hpp"

namespace bhc {

// Module-to-algebra map as a matrix over Q[d] (column u = image of the
// u-th module generator); commutes with d by construction.
struct OOperator {
  MatrixP t; // algebra rank x module rank

  static OOperator zero(size_t alg_rank, size_t mod_rank);
  size_t alg_rank() const { return t.size(); }
  size_t mod_rank() const { return t.empty() ? 0 : t[0].size(); }

  Element apply(const Element& m) const;
  LValue apply(const LValue& v) const;
};

// Verifies the intertwining laws T phi = alpha T, T psi = beta T and the
// twisted Rota-Baxter identity
//   [Tu_x Tv] = T( rho(Tu)_x v
//                  - (-1)^{|u||v|} rho(T phi^-1 psi(v))_{-x-d} phi psi^-1(u) )
// per module basis pair.  Requires phi (and psi) invertible.
CheckReport check_o_operator(const Algebra& A, const RepModule& M, const OOperator& T);

// The bracket induced on the module by a verified operator; carries the
// maps (phi, psi) and passes check_algebra, with T a homomorphism onto
// the image.
Algebra induced_bracket(const Algebra& A, const RepModule& M, const OOperator& T);

} // namespace bhc

#endif
