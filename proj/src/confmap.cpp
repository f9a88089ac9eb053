#include "bhc/confmap.hpp"

#include <stdexcept>

namespace bhc {

ConfMap ConfMap::zero(size_t n, Parity p, int arity)
{
  ConfMap f;
  f.parity = p;
  f.arity = arity;
  f.entries.assign(n, std::vector<Poly>(n));
  return f;
}

ConfMap ConfMap::identity(size_t n)
{
  ConfMap f = zero(n);
  for (size_t i = 0; i < n; ++i) f.entries[i][i] = Poly(1);
  return f;
}

LValue ConfMap::column(size_t i) const
{
  LValue v(arity, rank());
  for (size_t j = 0; j < rank(); ++j) v.c[j] = entries[j][i];
  return v;
}

ConfMap& ConfMap::operator+=(const ConfMap& o)
{
  arity = std::max(arity, o.arity);
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries[i].size(); ++j) entries[i][j] += o.entries[i][j];
  return *this;
}

ConfMap& ConfMap::operator-=(const ConfMap& o)
{
  arity = std::max(arity, o.arity);
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries[i].size(); ++j) entries[i][j] -= o.entries[i][j];
  return *this;
}

ConfMap ConfMap::operator-() const
{
  ConfMap r(*this);
  for (auto& row : r.entries)
    for (auto& p : row) p = -p;
  return r;
}

ConfMap& ConfMap::operator*=(const Poly& p)
{
  for (auto& row : entries)
    for (auto& q : row) q *= p;
  return *this;
}

LValue confmap_apply(const ConfMap& f, const LValue& v, const Poly& slot)
{
  if (f.arity != 1) throw std::invalid_argument("confmap_apply: map must have one slot");
  if (v.rank() != f.rank()) throw std::invalid_argument("confmap_apply: rank mismatch");
  LValue r(v.arity, f.rank());
  Poly shift = poly_d() + slot;
  std::vector<Poly> shifted(v.rank());
  for (size_t k = 0; k < v.rank(); ++k) shifted[k] = v.c[k].substitute(sym_d, shift);
  for (size_t j = 0; j < f.rank(); ++j) {
    for (size_t k = 0; k < f.rank(); ++k) {
      if (f.entries[j][k].is_zero() || shifted[k].is_zero()) continue;
      r.c[j] += f.entries[j][k].substitute(sym_slot(1), slot) * shifted[k];
    }
  }
  r.arity = std::max(r.max_slot(), 0);
  return r;
}

LValue confmap_apply(const ConfMap& f, const Element& e, const Poly& slot)
{
  return confmap_apply(f, LValue::from_element(e), slot);
}

ConfMap compose_map_endo(const ConfMap& f, const EndoMap& m)
{
  ConfMap r = ConfMap::zero(f.rank(), f.parity, f.arity);
  for (size_t i = 0; i < f.rank(); ++i) {
    LValue col = confmap_apply(f, m.column(i), poly_slot(1));
    for (size_t j = 0; j < f.rank(); ++j) r.entries[j][i] = col.c[j];
  }
  return r;
}

ConfMap compose_endo_map(const EndoMap& m, const ConfMap& f)
{
  ConfMap r = ConfMap::zero(f.rank(), f.parity, f.arity);
  for (size_t i = 0; i < f.rank(); ++i) {
    LValue col = m.apply(f.column(i));
    for (size_t j = 0; j < f.rank(); ++j) r.entries[j][i] = col.c[j];
  }
  return r;
}

bool in_omega(const Algebra& A, const ConfMap& f)
{
  return compose_map_endo(f, A.alpha) == compose_endo_map(A.alpha, f) &&
         compose_map_endo(f, A.beta) == compose_endo_map(A.beta, f);
}

ConfMap gc_bracket(const ConfMap& f, const ConfMap& g)
{
  if (f.arity != 1 || g.arity != 1)
    throw std::invalid_argument("gc_bracket: operands must have one slot");
  size_t n = f.rank();
  ConfMap r = ConfMap::zero(n, f.parity + g.parity, 2);
  Poly mu_minus_lambda = poly_slot(2) - poly_slot(1);
  int sg = parity_sign(f.parity, g.parity);
  for (size_t i = 0; i < n; ++i) {
    LValue gcol = g.column(i).substitute(sym_slot(1), mu_minus_lambda);
    LValue t1 = confmap_apply(f, gcol, poly_slot(1));
    LValue t2 = confmap_apply(g, f.column(i), mu_minus_lambda);
    // t2 entries: g's slot already renamed to x2-x1 by confmap_apply
    for (size_t j = 0; j < n; ++j)
      r.entries[j][i] = sg < 0 ? t1.c[j] + t2.c[j] : t1.c[j] - t2.c[j];
  }
  return r;
}

std::vector<ConfMap> lambda_coefficients(const ConfMap& h)
{
  if (h.arity != 2) throw std::invalid_argument("lambda_coefficients: arity-2 map expected");
  int maxdeg = 0;
  for (const auto& row : h.entries)
    for (const auto& p : row) maxdeg = std::max(maxdeg, p.degree_in(sym_slot(1)));
  std::vector<ConfMap> out;
  for (int k = 0; k <= maxdeg; ++k) {
    ConfMap c = ConfMap::zero(h.rank(), h.parity, 1);
    bool nonzero = false;
    for (size_t i = 0; i < h.rank(); ++i)
      for (size_t j = 0; j < h.rank(); ++j) {
        Poly p = h.entries[i][j].coeff_of(sym_slot(1), k).substitute(sym_slot(2), poly_slot(1));
        if (!p.is_zero()) nonzero = true;
        c.entries[i][j] = std::move(p);
      }
    if (nonzero) out.push_back(std::move(c));
  }
  return out;
}

} // namespace bhc
