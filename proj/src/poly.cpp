#include "bhc/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace bhc {

std::string sym_name(SymId s)
{
  if (s == sym_d) return "d";
  if (is_slot(s)) return "x" + std::to_string(s);
  return "c" + std::to_string(s - kParamBase + 1);
}

int monomial_degree(const Monomial& m)
{
  int d = 0;
  for (int e : m) d += e;
  return d;
}

static void trim(Monomial& m)
{
  while (!m.empty() && m.back() == 0) m.pop_back();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ea = i < a.size() ? a[i] : 0;
    int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Poly::Poly(const Scalar& c)
{
  if (!bhc::is_zero(c)) terms_[Monomial{}] = c;
}

Poly::Poly(long c) : Poly(Scalar(c)) {}

Poly Poly::var(SymId s, int exp)
{
  assert(s >= 0 && exp >= 0);
  Poly p;
  if (exp == 0) return Poly(1);
  Monomial m(static_cast<size_t>(s) + 1, 0);
  m[static_cast<size_t>(s)] = exp;
  p.terms_[m] = Scalar(1);
  return p;
}

Poly Poly::term(const Scalar& c, const Monomial& m)
{
  Poly p;
  Monomial mm = m;
  trim(mm);
  if (!bhc::is_zero(c)) p.terms_[mm] = c;
  return p;
}

bool Poly::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Poly::constant_term() const
{
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c)
{
  if (bhc::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (bhc::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o)
{
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
  for (const auto& [m, c] : o.terms_) add_term(m, Scalar(-c));
  return *this;
}

Poly Poly::operator-() const
{
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly& Poly::operator*=(const Poly& o)
{
  Poly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c)
{
  if (bhc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::pow(int e) const
{
  assert(e >= 0);
  Poly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

int Poly::total_degree() const
{
  if (terms_.empty()) return -1;
  // Canonical order puts the highest total degree first.
  return monomial_degree(terms_.begin()->first);
}

int Poly::degree_in(SymId s) const
{
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (static_cast<size_t>(s) < m.size()) d = std::max(d, m[static_cast<size_t>(s)]);
  return d;
}

bool Poly::uses(SymId s) const
{
  for (const auto& [m, c] : terms_)
    if (static_cast<size_t>(s) < m.size() && m[static_cast<size_t>(s)] > 0) return true;
  return false;
}

int Poly::max_slot() const
{
  int r = 0;
  for (const auto& [m, c] : terms_)
    for (size_t i = 1; i < m.size() && i < static_cast<size_t>(kParamBase); ++i)
      if (m[i] > 0) r = std::max(r, static_cast<int>(i));
  return r;
}

bool Poly::slots_free() const { return max_slot() == 0; }

bool Poly::param_linear() const
{
  for (const auto& [m, c] : terms_) {
    int pdeg = 0;
    for (size_t i = kParamBase; i < m.size(); ++i) pdeg += m[i];
    if (pdeg > 1) return false;
  }
  return true;
}

Poly Poly::coeff_of(SymId s, int k) const
{
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = static_cast<size_t>(s) < m.size() ? m[static_cast<size_t>(s)] : 0;
    if (e != k) continue;
    Monomial mm = m;
    if (static_cast<size_t>(s) < mm.size()) mm[static_cast<size_t>(s)] = 0;
    trim(mm);
    r.add_term(mm, c);
  }
  return r;
}

Poly Poly::substitute(SymId s, const Poly& value) const
{
  std::map<SymId, Poly> subs;
  subs.emplace(s, value);
  return substitute_many(subs);
}

Poly Poly::substitute_many(const std::map<SymId, Poly>& subs) const
{
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    Monomial rest = m;
    for (const auto& [s, value] : subs) {
      size_t i = static_cast<size_t>(s);
      if (i < rest.size() && rest[i] > 0) {
        t *= value.pow(rest[i]);
        rest[i] = 0;
      }
    }
    trim(rest);
    t *= Poly::term(Scalar(1), rest);
    r += t;
  }
  return r;
}

void Poly::for_each(const std::function<void(const Monomial&, const Scalar&)>& fn) const
{
  for (const auto& [m, c] : terms_) fn(m, c);
}

std::string Poly::str(bool single_slot) const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::string name = (single_slot && i == 1) ? "x" : sym_name(static_cast<SymId>(i));
      if (m[i] > 1) name += "^" + std::to_string(m[i]);
      factors.push_back(name);
    }
    if (factors.empty()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod_in_d(const Poly& a, const Poly& b)
{
  if (b.is_zero()) throw std::invalid_argument("divmod_in_d: division by zero");
  Poly q, r = a;
  int db = b.degree_in(sym_d);
  Poly lb = b.coeff_of(sym_d, db);
  if (!lb.is_constant())
    throw std::invalid_argument("divmod_in_d: divisor not univariate in d");
  Scalar lead = lb.constant_term();
  while (!r.is_zero() && r.degree_in(sym_d) >= db) {
    int dr = r.degree_in(sym_d);
    Poly lr = r.coeff_of(sym_d, dr);
    if (!lr.is_constant())
      throw std::invalid_argument("divmod_in_d: dividend not univariate in d");
    Scalar f = lr.constant_term() / lead;
    Poly t = Poly(f) * Poly::var(sym_d, dr - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

} // namespace bhc
