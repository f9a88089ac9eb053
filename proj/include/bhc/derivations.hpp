#ifndef BHC_DERIVATIONS_HPP
#define BHC_DERIVATIONS_HPP

#include "bhc/ansatz.hpp"
#include "bhc/confmap.hpp"
#include "bhc/errors.hpp"

#include <optional>

namespace bhc {

// Residuals of the twisted Leibniz law
//   f_x1([a _x2 b]) = [f_x1(a) _{x1+x2} m(b)] + (-1)^{|a||f|} [m(a) _x2 f_x1(b)]
// with m = alpha^k beta^l, plus the Omega commutation conditions.
CheckReport is_derivation(const Algebra& A, const ConfMap& f, int k, int l);

// f_x(b) = [a_x m(b)] with m = alpha^{k+1} beta^{l-1}; requires
// alpha(a) = beta(a) = a and homogeneous a.  For l = 0 the map beta must
// be invertible.  The result passes is_derivation with exponents
// (k+1, l).
ConfMap inner_derivation(const Algebra& A, const Element& a, int k, int l);

// Exact basis of the parity-theta maps with entry degree <= deg
// satisfying the Leibniz law and the Omega conditions.
std::vector<ConfMap> solve_derivations(const Algebra& A, int k, int l, Parity theta, int deg);

struct ClassifyFlags {
  bool centroid = false;
  bool quasicentroid = false;
  bool central_derivation = false;
};

// Identity-by-identity flags for the bracket-compatibility classes.
ClassifyFlags classify_map(const Algebra& A, const ConfMap& f, int k, int l);

struct DerivationWitness {
  ConfMap fprime, fsecond;
  int k = 0, l = 0;
};

// Searches for (f', f'') of the parity of f with entry degree <= deg
// satisfying
//   [f_x1(a) _{x1+x2} m(b)] + (-1)^{|a||f|} [m(a) _x2 f'_x1(b)] = f''_x1([a _x2 b]);
// nullopt means "not witnessed at this degree bound", not a disproof.
std::optional<DerivationWitness> witness_generalized(const Algebra& A, const ConfMap& f,
                                                     int k, int l, int deg,
                                                     bool force_zero_second = false);

// Triples (f, f', f'') spanning the generalized-derivation pairs at the
// degree bound.
struct GDerTriple {
  ConfMap f, fprime, fsecond;
};
std::vector<GDerTriple> solve_generalized_derivations(const Algebra& A, int k, int l,
                                                      Parity theta, int deg);

// Companion h' solving the quasiderivation identity for a fixed h, if one
// exists at the degree bound.
std::optional<ConfMap> quasider_companion(const Algebra& A, const ConfMap& h, int k, int l,
                                          int deg);

std::vector<ConfMap> solve_centroids(const Algebra& A, int k, int l, Parity theta, int deg);
std::vector<ConfMap> solve_quasicentroids(const Algebra& A, int k, int l, Parity theta,
                                          int deg);
std::vector<ConfMap> solve_central_derivations(const Algebra& A, int k, int l, Parity theta,
                                               int deg);
// Pairs (f, companion f') satisfying the quasiderivation identity; the
// companion realizes the witness needed downstream.
std::vector<std::pair<ConfMap, ConfMap>> solve_quasiderivations(const Algebra& A, int k,
                                                                int l, Parity theta, int deg);

// Parameter-generic combination of solved maps (for symbolic "all
// members" identities).
ConfMap confmap_span_generic(const std::vector<ConfMap>& basis, ParamPool& pool);

} // namespace bhc

#endif
