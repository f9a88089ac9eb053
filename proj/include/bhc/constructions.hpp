#ifndef BHC_CONSTRUCTIONS_HPP
#define BHC_CONSTRUCTIONS_HPP

#include "bhc/algebra.hpp"
#include "bhc/errors.hpp"
#include "bhc/repmodule.hpp"
#include "bhc/superalgebra.hpp"

namespace bhc {

// Each builder verifies its hypotheses before building and throws
// HypothesisViolation naming the failed identity otherwise.  On inputs
// satisfying the hypotheses, every output passes check_algebra.

// Current-style algebra of a finite superalgebra: the bracket table is
// the constant structure-constant datum, the maps act on the finite part.
Algebra cur(const SuperAlgebraFD& g);

// Tensor of an untwisted algebra with a finite supercommutative
// associative superalgebra B: basis (e_i, b_p), bracket
// [(e_i x b_p) (e_j x b_q)] = (-1)^{|p||j|} [e_i e_j] x (b_p b_q).
Algebra tensor_superalgebra(const Algebra& R, const SuperAlgebraFD& B);

// Twist of an untwisted algebra by two commuting even multiplicative maps:
// new bracket [a b]' = [f(a) g(b)], structure maps (f, g).
Algebra yau_twist(const Algebra& R, const EndoMap& f, const EndoMap& g);

// Twist of an already twisted algebra by two further even morphisms that
// commute with everything in sight: bracket composed with (f x g), maps
// (alpha f, beta g).
Algebra composition_twist(const Algebra& R, const EndoMap& f, const EndoMap& g);

// composition_twist with f = alpha^k, g = beta^k.
Algebra power_twist(const Algebra& R, int k);

// Componentwise structure on the direct sum, cross brackets zero.
Algebra direct_sum(const Algebra& R, const Algebra& S);

// Commutator-style bracket of an associative lambda-product with regular
// commuting maps:
//   [a b] = a_x b - (-1)^{|a||b|} (alpha^-1 beta b)_{-x-d} (alpha beta^-1 a).
Algebra from_associative(const AssocConformal& A);

// Semidirect product of a regular algebra with a regular module: the
// module becomes an abelian ideal, mixed brackets through the action.
Algebra semidirect(const Algebra& R, const RepModule& M);

} // namespace bhc

#endif
