#ifndef BHC_POLYMOD_HPP
#define BHC_POLYMOD_HPP

#include "bhc/poly.hpp"

#include <vector>

namespace bhc {

// Element of a free Q[d]-module: one polynomial in d per basis generator.
using PolyModVector = std::vector<Poly>;

// True iff v lies in the Q[d]-span of gens.  The generators are brought
// to a triangular Hermite-style form by Euclidean row reduction with
// degree-based pivoting, then v is reduced; membership requires exact
// divisibility at every pivot and a zero remainder.
bool hnf_membership(const std::vector<PolyModVector>& gens, const PolyModVector& v);

} // namespace bhc

#endif
