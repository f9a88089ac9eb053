#ifndef BHC_ELEMENT_HPP
#define BHC_ELEMENT_HPP

#include "bhc/poly.hpp"

#include <optional>
#include <vector>

namespace bhc {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline int parity_sign(Parity a, Parity b)
{
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

// Basis-indexed vector of polynomials in d only: an element of a free
// Q[d]-module.
struct Element {
  std::vector<Poly> c;

  Element() = default;
  explicit Element(size_t rank) : c(rank) {}

  static Element unit(size_t rank, size_t i)
  {
    Element e(rank);
    e.c[i] = Poly(1);
    return e;
  }

  size_t rank() const { return c.size(); }
  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element& operator*=(const Poly& p);
  friend Element operator*(const Poly& p, Element e) { return e *= p; }
  bool operator==(const Element& o) const { return c == o.c; }

  // Declared parity of the support, if homogeneous.
  std::optional<Parity> homogeneous_parity(const std::vector<Parity>& parities) const;
};

// Basis-indexed vector of polynomials in d and the lambda slots
// x1..x_arity: a bracket / action / cochain value.
struct LValue {
  int arity = 0;
  std::vector<Poly> c;

  LValue() = default;
  LValue(int arity_, size_t rank) : arity(arity_), c(rank) {}

  static LValue from_element(const Element& e, int arity = 0)
  {
    LValue v(arity, e.rank());
    v.c = e.c;
    return v;
  }

  size_t rank() const { return c.size(); }
  bool is_zero() const;

  LValue& operator+=(const LValue& o);
  LValue& operator-=(const LValue& o);
  LValue operator-() const;
  friend LValue operator+(LValue a, const LValue& b) { return a += b; }
  friend LValue operator-(LValue a, const LValue& b) { return a -= b; }
  LValue& operator*=(const Poly& p);
  friend LValue operator*(const Poly& p, LValue v) { return v *= p; }
  bool operator==(const LValue& o) const { return c == o.c; }

  bool uses_slot(int slot) const;
  int max_slot() const;

  LValue substitute(SymId s, const Poly& value) const;
  LValue substitute_many(const std::map<SymId, Poly>& subs) const;

  // Requires a slot-free value; drops the arity tag.
  Element to_element() const;

  // Coefficient of slot^k, arity reduced accordingly only by renaming on
  // the caller's side; slots of the result are untouched.
  LValue coeff_of_slot(int slot, int k) const;

  // Renumbers the slots actually used to x1..xk preserving order;
  // reported residuals are normalized this way so failures are
  // reproducible bit for bit.
  LValue normalized_slots() const;
};

} // namespace bhc

#endif
