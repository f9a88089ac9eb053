#include "bhc/endomap.hpp"

#include <cassert>
#include <stdexcept>

namespace bhc {

bool EndoMap::is_identity() const { return m == identity_p(rank()); }

Element EndoMap::apply(const Element& e) const
{
  if (e.rank() != rank()) throw std::invalid_argument("EndoMap::apply: dimension mismatch");
  Element r(rank());
  for (size_t j = 0; j < rank(); ++j)
    for (size_t i = 0; i < rank(); ++i) r.c[j] += m[j][i] * e.c[i];
  return r;
}

LValue EndoMap::apply(const LValue& v) const
{
  if (v.rank() != rank()) throw std::invalid_argument("EndoMap::apply: dimension mismatch");
  LValue r(v.arity, rank());
  for (size_t j = 0; j < rank(); ++j)
    for (size_t i = 0; i < rank(); ++i) r.c[j] += m[j][i] * v.c[i];
  return r;
}

Element EndoMap::column(size_t i) const
{
  Element r(rank());
  for (size_t j = 0; j < rank(); ++j) r.c[j] = m[j][i];
  return r;
}

EndoMap EndoMap::power(int k) const
{
  assert(k >= 0);
  EndoMap r = identity(rank());
  for (int i = 0; i < k; ++i) r = r.compose(*this);
  return r;
}

bool EndoMap::commutes_with(const EndoMap& o) const
{
  return mul(m, o.m) == mul(o.m, m);
}

bool EndoMap::is_even(const std::vector<Parity>& parities) const
{
  for (size_t i = 0; i < rank(); ++i)
    if (!odd_part_of_column(i, parities).is_zero()) return false;
  return true;
}

Element EndoMap::odd_part_of_column(size_t i, const std::vector<Parity>& parities) const
{
  Element r(rank());
  for (size_t j = 0; j < rank(); ++j)
    if (parities[j] != parities[i]) r.c[j] = m[j][i];
  return r;
}

bool EndoMap::is_regular() const
{
  Poly d = det_in_d(m);
  return d.is_constant() && !d.is_zero();
}

std::optional<EndoMap> EndoMap::inverse() const
{
  auto inv = inverse_in_d(m);
  if (!inv) return std::nullopt;
  return EndoMap(std::move(*inv));
}

} // namespace bhc
