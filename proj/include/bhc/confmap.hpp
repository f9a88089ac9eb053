#ifndef BHC_CONFMAP_HPP
#define BHC_CONFMAP_HPP

#include "bhc/algebra.hpp"

namespace bhc {

// Conformal linear map on the algebra's underlying module: a matrix over
// Q[d, x] (column i = f_x(e_i)), extended by f_x(p(d) m) = p(d+x) f_x(m).
// arity > 1 appears for bracket values like [f_x1 g]_x2, which carry one
// evaluation slot per nesting level (the last slot is the evaluation
// variable).
struct ConfMap {
  Parity parity = Parity::even;
  int arity = 1;
  MatrixP entries;

  static ConfMap zero(size_t n, Parity p = Parity::even, int arity = 1);
  static ConfMap identity(size_t n);

  size_t rank() const { return entries.size(); }
  bool is_zero() const { return bhc::is_zero(entries); }
  LValue column(size_t i) const;

  ConfMap& operator+=(const ConfMap& o);
  ConfMap& operator-=(const ConfMap& o);
  friend ConfMap operator+(ConfMap a, const ConfMap& b) { return a += b; }
  friend ConfMap operator-(ConfMap a, const ConfMap& b) { return a -= b; }
  ConfMap operator-() const;
  ConfMap& operator*=(const Poly& p);
  bool operator==(const ConfMap& o) const { return entries == o.entries; }
};

// f applied at an arbitrary slot polynomial: the value's coefficients are
// shifted d -> d + slot, then the matrix acts with its slot set to
// `slot`.  Only arity-1 maps are applied.
LValue confmap_apply(const ConfMap& f, const LValue& v, const Poly& slot);
LValue confmap_apply(const ConfMap& f, const Element& e, const Poly& slot);

ConfMap compose_map_endo(const ConfMap& f, const EndoMap& m); // f after m
ConfMap compose_endo_map(const EndoMap& m, const ConfMap& f); // m after f

// Membership in the commutant Omega = { f : f alpha = alpha f, f beta = beta f }.
bool in_omega(const Algebra& A, const ConfMap& f);

// [f_x1 g]_x2 = f_x1 g_{x2-x1} - (-1)^{|f||g|} g_{x2-x1} f_x1 as an
// arity-2 map.
ConfMap gc_bracket(const ConfMap& f, const ConfMap& g);

// Coefficients of powers of the first slot of an arity-2 map, renumbered
// back to arity-1 maps.  Zero coefficients are skipped.
std::vector<ConfMap> lambda_coefficients(const ConfMap& h);

} // namespace bhc

#endif
