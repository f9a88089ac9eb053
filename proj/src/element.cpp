#include "bhc/element.hpp"

#include <stdexcept>

namespace bhc {

bool Element::is_zero() const
{
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

Element& Element::operator+=(const Element& o)
{
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Element& Element::operator-=(const Element& o)
{
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Element Element::operator-() const
{
  Element r(*this);
  for (auto& p : r.c) p = -p;
  return r;
}

Element& Element::operator*=(const Poly& p)
{
  for (auto& q : c) q *= p;
  return *this;
}

std::optional<Parity> Element::homogeneous_parity(const std::vector<Parity>& parities) const
{
  std::optional<Parity> r;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!r)
      r = parities[i];
    else if (*r != parities[i])
      return std::nullopt;
  }
  if (!r) return Parity::even; // zero element is even by convention
  return r;
}

bool LValue::is_zero() const
{
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

LValue& LValue::operator+=(const LValue& o)
{
  arity = std::max(arity, o.arity);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

LValue& LValue::operator-=(const LValue& o)
{
  arity = std::max(arity, o.arity);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

LValue LValue::operator-() const
{
  LValue r(*this);
  for (auto& p : r.c) p = -p;
  return r;
}

LValue& LValue::operator*=(const Poly& p)
{
  for (auto& q : c) q *= p;
  return *this;
}

bool LValue::uses_slot(int slot) const
{
  for (const auto& p : c)
    if (p.uses(sym_slot(slot))) return true;
  return false;
}

int LValue::max_slot() const
{
  int r = 0;
  for (const auto& p : c) r = std::max(r, p.max_slot());
  return r;
}

LValue LValue::substitute(SymId s, const Poly& value) const
{
  LValue r(*this);
  for (auto& p : r.c) p = p.substitute(s, value);
  r.arity = std::max(r.max_slot(), 0);
  return r;
}

LValue LValue::substitute_many(const std::map<SymId, Poly>& subs) const
{
  LValue r(*this);
  for (auto& p : r.c) p = p.substitute_many(subs);
  r.arity = std::max(r.max_slot(), 0);
  return r;
}

Element LValue::to_element() const
{
  Element e(rank());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].max_slot() != 0)
      throw std::invalid_argument("LValue::to_element: value still carries lambda slots");
    e.c[i] = c[i];
  }
  return e;
}

LValue LValue::coeff_of_slot(int slot, int k) const
{
  LValue r(arity, rank());
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i].coeff_of(sym_slot(slot), k);
  r.arity = r.max_slot();
  return r;
}

LValue LValue::normalized_slots() const
{
  std::vector<int> used;
  for (int s = 1; s < kParamBase; ++s)
    if (uses_slot(s)) used.push_back(s);
  std::map<SymId, Poly> subs;
  bool trivial = true;
  for (size_t i = 0; i < used.size(); ++i) {
    if (used[i] != static_cast<int>(i) + 1) trivial = false;
    subs.emplace(sym_slot(used[i]), poly_slot(static_cast<int>(i) + 1));
  }
  if (trivial) {
    LValue r(*this);
    r.arity = static_cast<int>(used.size());
    return r;
  }
  LValue r = substitute_many(subs);
  r.arity = static_cast<int>(used.size());
  return r;
}

} // namespace bhc
