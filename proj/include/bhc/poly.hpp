#ifndef BHC_POLY_HPP
#define BHC_POLY_HPP

#include "bhc/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bhc {

// Symbol ids used inside polynomials:
//   0           -> d   (the module derivation, rendered "d")
//   1..15       -> x1..x15 (lambda slots, in nesting order; "x" == "x1")
//   16 and up   -> c1, c2, ... (free parameters used by the ansatz solvers)
using SymId = int;

inline constexpr SymId sym_d = 0;
inline constexpr SymId kParamBase = 16;

inline SymId sym_slot(int i) { return i; }          // i >= 1
inline SymId sym_param(int i) { return kParamBase + i - 1; } // i >= 1

inline bool is_slot(SymId s) { return s >= 1 && s < kParamBase; }
inline bool is_param(SymId s) { return s >= kParamBase; }

std::string sym_name(SymId s);

// Exponent vector over the symbol ids above, trailing zeros trimmed.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

// Canonical term order: total degree descending, ties broken by the
// earlier symbol carrying the higher exponent (so d^2 > d*x1 > x1^2 and
// d > x1 > x2).  Map iteration order therefore matches rendering order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial in d, the lambda slots and parameters.
// The zero polynomial is the empty map; no zero coefficients are stored,
// so two polynomials are equal iff their term maps are identical.
class Poly {
public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  Poly() = default;
  explicit Poly(const Scalar& c);
  explicit Poly(long c);

  static Poly var(SymId s, int exp = 1);
  static Poly term(const Scalar& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the empty monomial).
  Scalar constant_term() const;

  const Terms& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;

  int total_degree() const;       // -1 for the zero polynomial
  int degree_in(SymId s) const;   // -1 for the zero polynomial
  bool uses(SymId s) const;
  // Largest lambda-slot index appearing, 0 if none.
  int max_slot() const;
  // True if every symbol is either d or a parameter (no lambda slots).
  bool slots_free() const;
  // True if the polynomial is at most degree 1 in every parameter symbol
  // and no monomial carries two distinct parameters.
  bool param_linear() const;

  // Coefficient of s^k, as a polynomial in the remaining symbols.
  Poly coeff_of(SymId s, int k) const;

  Poly substitute(SymId s, const Poly& value) const;
  // Simultaneous substitution (needed for slot swaps/relabelings).
  Poly substitute_many(const std::map<SymId, Poly>& subs) const;

  // Calls fn for every (monomial, coefficient) pair in canonical order.
  void for_each(const std::function<void(const Monomial&, const Scalar&)>& fn) const;

  // Canonical rendering, e.g. "d^2 + 3*d*x + 2*x^2 - 1/2".  Lambda slots
  // are rendered "x" when `single_slot` (arity-one contexts) and
  // "x1", "x2", ... otherwise.
  std::string str(bool single_slot = false) const;

private:
  void add_term(const Monomial& m, const Scalar& c);
  Terms terms_;
};

inline Poly poly_d() { return Poly::var(sym_d); }
inline Poly poly_slot(int i) { return Poly::var(sym_slot(i)); }
inline Poly poly_param(int i) { return Poly::var(sym_param(i)); }

// Exact division of univariate polynomials in d: a = q*b + r with
// deg r < deg b.  Both inputs must use no symbol other than d.
std::pair<Poly, Poly> divmod_in_d(const Poly& a, const Poly& b);

} // namespace bhc

#endif
