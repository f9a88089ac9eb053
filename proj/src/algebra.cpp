#include "bhc/algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace bhc {

LValue conf_eval_pair(const std::vector<std::vector<LValue>>& table, size_t out_rank,
                      const LValue& left, const LValue& right, int slot)
{
  if (left.uses_slot(slot) || right.uses_slot(slot))
    throw std::invalid_argument("conf_eval_pair: slot collides with an operand slot");
  LValue res(std::max({left.arity, right.arity, slot}), out_rank);
  Poly lsub = -poly_slot(slot);
  Poly rsub = poly_d() + poly_slot(slot);
  for (size_t i = 0; i < left.rank(); ++i) {
    if (left.c[i].is_zero()) continue;
    Poly lp = left.c[i].substitute(sym_d, lsub);
    for (size_t j = 0; j < right.rank(); ++j) {
      if (right.c[j].is_zero()) continue;
      const LValue& entry = table[i][j];
      if (entry.is_zero()) continue;
      Poly f = lp * right.c[j].substitute(sym_d, rsub);
      for (size_t k = 0; k < out_rank; ++k) {
        if (entry.c[k].is_zero()) continue;
        Poly e = slot == 1 ? entry.c[k] : entry.c[k].substitute(sym_slot(1), poly_slot(slot));
        res.c[k] += f * e;
      }
    }
  }
  return res;
}

int ConformalTable::index_of(const std::string& name) const
{
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int ConformalTable::max_table_degree() const
{
  int d = 0;
  for (const auto& row : table)
    for (const auto& v : row)
      for (const auto& p : v.c) d = std::max(d, p.total_degree());
  return d;
}

LValue ConformalTable::eval(const Element& a, const Element& b, int slot) const
{
  return conf_eval_pair(table, rank(), LValue::from_element(a), LValue::from_element(b), slot);
}

LValue ConformalTable::eval(const LValue& a, const LValue& b, int slot) const
{
  return conf_eval_pair(table, rank(), a, b, slot);
}

void CheckReport::add(const std::string& axiom, std::vector<std::string> where, const LValue& residual)
{
  if (residual.is_zero()) return;
  violations.push_back({axiom, std::move(where), residual.normalized_slots()});
}

LValue eval_bracket(const Algebra& A, const Element& a, const Element& b, int slot)
{
  return A.eval(a, b, slot);
}

LValue eval_into(const Algebra& A, const Element& a, const LValue& v, int slot)
{
  return A.eval(LValue::from_element(a), v, slot);
}

LValue eval_from(const Algebra& A, const LValue& v, const Element& b, int slot)
{
  return A.eval(v, LValue::from_element(b), slot);
}

Element nth_product(const Algebra& A, const Element& a, const Element& b, int n)
{
  Element zero(A.rank());
  if (n < 0) return zero; // a_(n) b = 0 for negative n
  LValue w = eval_bracket(A, a, b, 1);
  LValue coeff = w.coeff_of_slot(1, n);
  Scalar fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  Element e = coeff.to_element();
  e *= Poly(fact);
  return e;
}

namespace {

// Structure-map and grading checks shared by the Lie and associative
// checkers.
void check_table_common(const ConformalTable& A, CheckReport& rep, int s1, bool require_commute)
{
  size_t n = A.rank();
  for (size_t i = 0; i < n; ++i) {
    rep.add("alpha-even", {A.names[i]},
            LValue::from_element(A.alpha.odd_part_of_column(i, A.parity)));
    rep.add("beta-even", {A.names[i]},
            LValue::from_element(A.beta.odd_part_of_column(i, A.parity)));
  }
  if (require_commute) {
    EndoMap ab = A.alpha.compose(A.beta), ba = A.beta.compose(A.alpha);
    for (size_t i = 0; i < n; ++i)
      rep.add("alpha-beta-commute", {A.names[i]},
              LValue::from_element(ab.column(i) - ba.column(i)));
  }

  Poly x = poly_slot(s1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const LValue entry =
          s1 == 1 ? A.table[i][j] : A.table[i][j].substitute(sym_slot(1), poly_slot(s1));

      LValue bad(entry.arity, n);
      Parity want = A.parity[i] + A.parity[j];
      for (size_t k = 0; k < n; ++k)
        if (A.parity[k] != want) bad.c[k] = entry.c[k];
      rep.add("grading", {A.names[i], A.names[j]}, bad);

      Element da(n), db(n);
      da.c[i] = poly_d();
      db.c[j] = poly_d();
      rep.add("sesquilinearity", {A.names[i], A.names[j]},
              A.eval(da, A.unit(j), s1) + x * entry);
      rep.add("sesquilinearity", {A.names[i], A.names[j]},
              A.eval(A.unit(i), db, s1) - (poly_d() + x) * entry);

      rep.add("alpha-multiplicative", {A.names[i], A.names[j]},
              A.alpha.apply(entry) - A.eval(A.alpha.column(i), A.alpha.column(j), s1));
      rep.add("beta-multiplicative", {A.names[i], A.names[j]},
              A.beta.apply(entry) - A.eval(A.beta.column(i), A.beta.column(j), s1));
    }
  }
}

} // namespace

CheckReport check_algebra(const Algebra& A, int slot0)
{
  CheckReport rep;
  size_t n = A.rank();
  int s1 = slot0, s2 = slot0 + 1, s3 = slot0 + 2;
  check_table_common(A, rep, s1, /*require_commute=*/true);

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      LValue lhs = A.eval(A.beta.column(i), A.alpha.column(j), s1);
      LValue mirror = A.eval(A.beta.column(j), A.alpha.column(i), s1)
                          .substitute(sym_slot(s1), -poly_slot(s1) - poly_d());
      int sg = parity_sign(A.parity[i], A.parity[j]);
      LValue res = sg < 0 ? lhs - mirror : lhs + mirror;
      rep.add("skew-symmetry", {A.names[i], A.names[j]}, res);
    }
  }

  for (size_t i = 0; i < n; ++i) {
    Element abi = A.alpha.apply(A.beta.column(i));
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        LValue inner = A.eval(A.unit(j), A.unit(k), s2);
        LValue lhs = A.eval(LValue::from_element(abi), inner, s1);
        LValue left = A.eval(A.beta.column(i), A.unit(j), s1);
        LValue rhs1 = A.eval(left, LValue::from_element(A.beta.column(k)), s3)
                          .substitute(sym_slot(s3), poly_slot(s1) + poly_slot(s2));
        LValue inner2 = A.eval(A.alpha.column(i), A.unit(k), s1);
        LValue rhs2 = A.eval(LValue::from_element(A.beta.column(j)), inner2, s2);
        int sg = parity_sign(A.parity[i], A.parity[j]);
        LValue res = lhs - rhs1 - (sg < 0 ? -rhs2 : rhs2);
        rep.add("jacobi", {A.names[i], A.names[j], A.names[k]}, res);
      }
    }
  }
  return rep;
}

CheckReport check_associative(const AssocConformal& A, int slot0)
{
  CheckReport rep;
  size_t n = A.rank();
  int s1 = slot0, s2 = slot0 + 1, s3 = slot0 + 2;
  check_table_common(A, rep, s1, /*require_commute=*/false);

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        LValue inner = A.eval(A.unit(j), A.unit(k), s2);
        LValue lhs = A.eval(LValue::from_element(A.alpha.column(i)), inner, s1);
        LValue left = A.eval(A.unit(i), A.unit(j), s1);
        LValue rhs = A.eval(left, LValue::from_element(A.alpha.column(k)), s3)
                         .substitute(sym_slot(s3), poly_slot(s1) + poly_slot(s2));
        rep.add("associativity", {A.names[i], A.names[j], A.names[k]}, lhs - rhs);
      }
    }
  }
  return rep;
}

namespace {

bool in_span(const std::vector<Element>& gens, const Element& v)
{
  std::vector<PolyModVector> g;
  for (const auto& e : gens) g.push_back(e.c);
  return hnf_membership(g, v.c);
}

bool closed_under(const Algebra& A, const std::vector<Element>& gens,
                  const std::vector<Element>& left)
{
  for (const auto& u : gens) {
    if (!in_span(gens, A.alpha.apply(u))) return false;
    if (!in_span(gens, A.beta.apply(u))) return false;
  }
  for (const auto& a : left) {
    for (const auto& v : gens) {
      LValue w = eval_bracket(A, a, v, 1);
      int deg = 0;
      for (const auto& p : w.c) deg = std::max(deg, p.degree_in(sym_slot(1)));
      for (int k = 0; k <= deg; ++k) {
        Element coeff = w.coeff_of_slot(1, k).to_element();
        if (!in_span(gens, coeff)) return false;
      }
    }
  }
  return true;
}

} // namespace

bool is_subalgebra(const Algebra& A, const std::vector<Element>& gens)
{
  return closed_under(A, gens, gens);
}

bool is_ideal(const Algebra& A, const std::vector<Element>& gens)
{
  std::vector<Element> all;
  for (size_t i = 0; i < A.rank(); ++i) all.push_back(A.unit(i));
  return closed_under(A, gens, all);
}

} // namespace bhc
