#ifndef BHC_BUILTINS_HPP
#define BHC_BUILTINS_HPP

#include "bhc/algebra.hpp"

namespace bhc {

// Rank-2 superalgebra with an even generator L and an odd generator E:
//   [L_x L] = (d + 2x) L,   [L_x E] = (d + 3/2 x) E,
//   [E_x L] = (1/2 d + 3/2 x) E,   [E_x E] = 0,
// twisted by alpha(L) = f(d) L, alpha(E) = g(d) E and beta = id.
// f = g = 1 is the "virasoro_ns" builtin and passes every axiom; other
// choices of (f, g) are for the checker to judge.
Algebra make_virasoro_ns(const Poly& f, const Poly& g);
inline Algebra make_virasoro_ns() { return make_virasoro_ns(Poly(1), Poly(1)); }

// Rank-3 algebra on e1 (even), e2, e3 (odd) with [e2_x e3] = [e3_x e2] = e1,
// alpha = (e1, e3, e2) swap, beta the swap with a sign.  The "ex25" builtin.
Algebra make_ex25();

// Current-style associative lambda-product on the 2x2 matrix superalgebra
// (diagonal units even, off-diagonal odd), alpha = beta = id.  The
// "cur_gl11" builtin.
AssocConformal make_cur_gl11();

} // namespace bhc

#endif
