#include "bhc/cochain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bhc {

namespace {

size_t ipow(size_t base, int exp)
{
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int pint(Parity p) { return static_cast<int>(p); }

LValue signed_value(LValue v, int exp2)
{
  return (exp2 & 1) ? -v : v;
}

// Exponent vectors over `syms` with total degree <= deg, in a fixed
// deterministic order.
void enum_monomials_rec(const std::vector<SymId>& syms, size_t pos, int budget, Monomial& cur,
                        std::vector<Monomial>& out)
{
  if (pos == syms.size()) {
    Monomial m = cur;
    while (!m.empty() && m.back() == 0) m.pop_back();
    out.push_back(m);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    size_t s = static_cast<size_t>(syms[pos]);
    if (cur.size() <= s) cur.resize(s + 1, 0);
    cur[s] = e;
    enum_monomials_rec(syms, pos + 1, budget - e, cur, out);
    cur[s] = 0;
  }
}

std::vector<Monomial> enum_monomials(const std::vector<SymId>& syms, int deg)
{
  std::vector<Monomial> out;
  Monomial cur;
  enum_monomials_rec(syms, 0, deg, cur, out);
  return out;
}

} // namespace

size_t Cochain::flat_index(const std::vector<size_t>& tuple) const
{
  size_t idx = 0;
  for (size_t t : tuple) idx = idx * alg_rank + t;
  return idx;
}

std::vector<size_t> Cochain::tuple_of(size_t flat) const
{
  std::vector<size_t> t(static_cast<size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<size_t>(i)] = flat % alg_rank;
    flat /= alg_rank;
  }
  return t;
}

bool Cochain::is_zero() const
{
  for (const auto& v : table)
    if (!v.is_zero()) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& o)
{
  assert(arity == o.arity && table.size() == o.table.size());
  for (size_t i = 0; i < table.size(); ++i) table[i] += o.table[i];
  return *this;
}

Cochain& Cochain::operator*=(const Poly& p)
{
  for (auto& v : table) v *= p;
  return *this;
}

Cochain zero_cochain(const Algebra& A, const RepModule& M, int n, Parity theta)
{
  Cochain g;
  g.arity = n;
  g.parity = theta;
  g.alg_rank = A.rank();
  g.table.assign(ipow(A.rank(), n), LValue(n, M.rank()));
  return g;
}

Cochain cochain_from_element(const Algebra& A, const RepModule& M, const Element& m,
                             Parity theta)
{
  Cochain g = zero_cochain(A, M, 0, theta);
  g.table[0] = LValue::from_element(m);
  return g;
}

LValue eval_cochain(const Cochain& g, const std::vector<LValue>& args,
                    const std::vector<int>& slots)
{
  size_t n = static_cast<size_t>(g.arity);
  if (args.size() != n || slots.size() != n)
    throw std::invalid_argument("eval_cochain: arity mismatch");
  if (n == 0) return g.table[0];

  // argument coefficients at d -> -x_{slot}
  std::vector<std::vector<Poly>> sub(n);
  for (size_t t = 0; t < n; ++t) {
    sub[t].resize(args[t].rank());
    Poly minus_slot = -poly_slot(slots[t]);
    for (size_t k = 0; k < args[t].rank(); ++k)
      sub[t][k] = args[t].c[k].substitute(sym_d, minus_slot);
  }
  std::map<SymId, Poly> rename;
  bool trivial = true;
  for (size_t t = 0; t < n; ++t) {
    if (slots[t] != static_cast<int>(t) + 1) trivial = false;
    rename.emplace(sym_slot(static_cast<int>(t) + 1), poly_slot(slots[t]));
  }

  int max_slot = 0;
  for (int s : slots) max_slot = std::max(max_slot, s);
  LValue acc(max_slot, g.mod_rank());

  std::vector<size_t> tuple(n, 0);
  std::function<void(size_t, const Poly&)> rec = [&](size_t t, const Poly& factor) {
    if (t == n) {
      const LValue& entry = g.table[g.flat_index(tuple)];
      if (entry.is_zero()) return;
      LValue e = trivial ? entry : entry.substitute_many(rename);
      e *= factor;
      acc += e;
      return;
    }
    for (size_t k = 0; k < sub[t].size(); ++k) {
      if (sub[t][k].is_zero()) continue;
      tuple[t] = k;
      rec(t + 1, factor * sub[t][k]);
    }
  };
  rec(0, Poly(1));
  return acc;
}

LValue eval_cochain(const Cochain& g, const std::vector<Element>& args)
{
  std::vector<LValue> vargs;
  std::vector<int> slots;
  for (size_t t = 0; t < args.size(); ++t) {
    vargs.push_back(LValue::from_element(args[t]));
    slots.push_back(static_cast<int>(t) + 1);
  }
  return eval_cochain(g, vargs, slots);
}

std::string convention_name(const DiffConvention& cv)
{
  if (cv == DiffConvention{}) return "literal";
  std::string s;
  auto append = [&s](const char* part) {
    if (!s.empty()) s += "+";
    s += part;
  };
  if (cv.first_sign_split) append("split-first-sign");
  if (cv.power_full) append("power-n");
  if (cv.second_sum_gamma) append("gamma-bracket-sign");
  if (cv.first_sum_beta_args) append("beta-action-args");
  if (cv.zero_rule_general) append("twisted-zero-rule");
  return s;
}

Cochain differential(const Algebra& A, const RepModule& M, const Cochain& g,
                     const DiffConvention& cv)
{
  if (!A.is_regular())
    throw std::invalid_argument("differential: the algebra must be regular");
  int n = g.arity;
  Cochain r = zero_cochain(A, M, n + 1, g.parity);

  if (n == 0) {
    if (cv.zero_rule_general) {
      EndoMap a_binv = A.alpha.compose(*A.beta.inverse());
      int gpar = pint(g.parity);
      for (size_t i = 0; i < A.rank(); ++i) {
        LValue v = module_act(M, LValue::from_element(a_binv.column(i)), g.table[0], 1);
        r.table[i] = signed_value(v, gpar * pint(A.parity[i]));
      }
    } else {
      for (size_t i = 0; i < A.rank(); ++i)
        r.table[i] = module_act(M, LValue::from_element(A.unit(i)), g.table[0], 1);
    }
    return r;
  }

  EndoMap P = A.alpha.compose(A.beta.power(cv.power_full ? n : n - 1));
  EndoMap ainv_b = A.alpha.inverse()->compose(A.beta);
  int gpar = pint(g.parity);
  SymId fresh = sym_slot(n + 2);

  for (size_t flat = 0; flat < r.table.size(); ++flat) {
    std::vector<size_t> T = r.tuple_of(flat);
    std::vector<int> pi(T.size());
    std::vector<int> prefix(T.size() + 1, 0); // prefix[i] = |a_1| + ... + |a_i|
    for (size_t t = 0; t < T.size(); ++t) {
      pi[t] = pint(A.parity[T[t]]);
      prefix[t + 1] = prefix[t] + pi[t];
    }
    LValue acc(n + 1, M.rank());

    for (size_t i0 = 0; i0 <= static_cast<size_t>(n); ++i0) {
      LValue e;
      if (cv.first_sum_beta_args) {
        std::vector<LValue> args;
        std::vector<int> slots;
        for (size_t p = 0; p < T.size(); ++p) {
          if (p == i0) continue;
          args.push_back(LValue::from_element(A.beta.column(T[p])));
          slots.push_back(static_cast<int>(p) + 1);
        }
        e = eval_cochain(g, args, slots);
      } else {
        std::vector<size_t> sub;
        for (size_t t = 0; t < T.size(); ++t)
          if (t != i0) sub.push_back(T[t]);
        const LValue& entry = g.table[g.flat_index(sub)];
        if (entry.is_zero()) continue;
        std::map<SymId, Poly> shift;
        for (int s = static_cast<int>(i0) + 1; s <= n; ++s)
          shift.emplace(sym_slot(s), poly_slot(s + 1));
        e = shift.empty() ? entry : entry.substitute_many(shift);
      }
      if (e.is_zero()) continue;
      LValue val = module_act(M, LValue::from_element(P.column(T[i0])), e,
                              static_cast<int>(i0) + 1);
      int exp = cv.first_sign_split ? gpar * pi[i0] + prefix[i0]
                                    : (gpar + prefix[i0]) * pi[i0];
      exp += static_cast<int>(i0); // (-1)^{i+1} with i = i0 + 1
      acc += signed_value(val, exp);
    }

    for (size_t i0 = 0; i0 + 1 < T.size(); ++i0) {
      for (size_t j0 = i0 + 1; j0 < T.size(); ++j0) {
        LValue w =
            A.eval(ainv_b.column(T[i0]), A.unit(T[j0]), static_cast<int>(i0) + 1);
        std::vector<LValue> args{w};
        std::vector<int> slots{n + 2};
        for (size_t p = 0; p < T.size(); ++p) {
          if (p == i0 || p == j0) continue;
          args.push_back(LValue::from_element(A.beta.column(T[p])));
          slots.push_back(static_cast<int>(p) + 1);
        }
        LValue val = eval_cochain(g, args, slots)
                         .substitute(fresh, poly_slot(static_cast<int>(i0) + 1) +
                                                poly_slot(static_cast<int>(j0) + 1));
        int exp = prefix[i0] * pi[i0] + prefix[j0] * pi[j0] + pi[i0] * pi[j0];
        if (cv.second_sum_gamma) exp += gpar * (pi[i0] + pi[j0]);
        exp += static_cast<int>(i0) + static_cast<int>(j0); // (-1)^{i+j}, 1-based
        acc += signed_value(val, exp);
      }
    }
    r.table[flat] = acc;
  }
  return r;
}

namespace {

void parity_support_residuals(const Algebra& A, const RepModule& M, const Cochain& g,
                              CheckReport& rep)
{
  for (size_t flat = 0; flat < g.table.size(); ++flat) {
    std::vector<size_t> T = g.tuple_of(flat);
    Parity want = g.parity;
    std::vector<std::string> where;
    for (size_t t : T) {
      want = want + A.parity[t];
      where.push_back(A.names[t]);
    }
    LValue bad(g.arity, g.mod_rank());
    for (size_t u = 0; u < g.mod_rank(); ++u)
      if (M.parity[u] != want) bad.c[u] = g.table[flat].c[u];
    rep.add("parity-support", where, bad);
  }
}

} // namespace

CheckReport cochain_residuals(const Algebra& A, const RepModule& M, const Cochain& g)
{
  CheckReport rep;
  parity_support_residuals(A, M, g, rep);
  int n = g.arity;
  if (n == 0) return rep;

  for (size_t flat = 0; flat < g.table.size(); ++flat) {
    std::vector<size_t> T = g.tuple_of(flat);
    std::vector<std::string> where;
    for (size_t t : T) where.push_back(A.names[t]);

    std::vector<LValue> alpha_args, beta_args;
    std::vector<int> slots;
    for (size_t t = 0; t < T.size(); ++t) {
      alpha_args.push_back(LValue::from_element(A.alpha.column(T[t])));
      beta_args.push_back(LValue::from_element(A.beta.column(T[t])));
      slots.push_back(static_cast<int>(t) + 1);
    }
    rep.add("alpha-commutativity", where,
            eval_cochain(g, alpha_args, slots) - M.phi.apply(g.table[flat]));
    rep.add("beta-commutativity", where,
            eval_cochain(g, beta_args, slots) - M.psi.apply(g.table[flat]));

    for (size_t s = 0; s + 1 < T.size(); ++s) {
      std::vector<LValue> a1, a2;
      std::vector<int> s1, s2;
      for (size_t t = 0; t < T.size(); ++t) {
        int slot = static_cast<int>(t) + 1;
        if (t == s) {
          a1.push_back(LValue::from_element(A.beta.column(T[s])));
          a2.push_back(LValue::from_element(A.beta.column(T[s + 1])));
          s1.push_back(slot);
          s2.push_back(slot + 1);
        } else if (t == s + 1) {
          a1.push_back(LValue::from_element(A.alpha.column(T[s + 1])));
          a2.push_back(LValue::from_element(A.alpha.column(T[s])));
          s1.push_back(slot);
          s2.push_back(slot - 1);
        } else {
          a1.push_back(LValue::from_element(A.unit(T[t])));
          a2.push_back(LValue::from_element(A.unit(T[t])));
          s1.push_back(slot);
          s2.push_back(slot);
        }
      }
      LValue v1 = eval_cochain(g, a1, s1);
      LValue v2 = eval_cochain(g, a2, s2);
      int exp = pint(A.parity[T[s]]) * pint(A.parity[T[s + 1]]);
      rep.add("skew", where, v1 + signed_value(v2, exp));
    }
  }
  return rep;
}

CheckReport check_d_squared(const Algebra& A, const RepModule& M, const Cochain& g,
                            const DiffConvention& cv)
{
  Cochain dd = differential(A, M, differential(A, M, g, cv), cv);
  CheckReport rep;
  for (size_t flat = 0; flat < dd.table.size(); ++flat) {
    std::vector<std::string> where;
    for (size_t t : dd.tuple_of(flat)) where.push_back(A.names[t]);
    rep.add("d-squared", where, dd.table[flat]);
  }
  return rep;
}

namespace {

struct CochainAnsatz {
  Cochain shape;
  std::vector<SymId> params;
};

CochainAnsatz make_cochain_ansatz(const Algebra& A, const RepModule& M, int n, Parity theta,
                                  int deg, ParamPool& pool)
{
  CochainAnsatz out;
  out.shape = zero_cochain(A, M, n, theta);
  if (deg < 0) return out;
  size_t before = pool.all().size();
  std::vector<SymId> syms{sym_d};
  for (int s = 1; s <= n; ++s) syms.push_back(sym_slot(s));
  std::vector<Monomial> mons = enum_monomials(syms, deg);
  for (size_t flat = 0; flat < out.shape.table.size(); ++flat) {
    Parity want = theta;
    for (size_t t : out.shape.tuple_of(flat)) want = want + A.parity[t];
    for (size_t u = 0; u < M.rank(); ++u) {
      if (M.parity[u] != want) continue;
      for (const auto& m : mons) {
        SymId c = pool.fresh();
        out.shape.table[flat].c[u] += Poly::var(c) * Poly::term(Scalar(1), m);
      }
    }
  }
  out.params.assign(pool.all().begin() + static_cast<long>(before), pool.all().end());
  return out;
}

void add_cochain_constraints(const Algebra& A, const RepModule& M, const Cochain& g,
                             EquationCollector& eqs)
{
  if (g.arity == 0) {
    // the commutativity conditions pin 0-cochains under phi and psi
    Element m = Element(M.rank());
    for (size_t u = 0; u < M.rank(); ++u) m.c[u] = g.table[0].c[u];
    Element rphi = M.phi.apply(m) - m;
    Element rpsi = M.psi.apply(m) - m;
    eqs.add_all(rphi.c);
    eqs.add_all(rpsi.c);
    return;
  }
  CheckReport rep = cochain_residuals(A, M, g);
  for (const auto& v : rep.violations) eqs.add_all(v.residual.c);
}

Cochain instantiate_cochain(const CochainAnsatz& ans, const VectorQ& values)
{
  Cochain g = ans.shape;
  std::map<SymId, Poly> subs;
  for (size_t i = 0; i < ans.params.size(); ++i) subs.emplace(ans.params[i], Poly(values[i]));
  for (auto& v : g.table)
    for (auto& p : v.c) p = p.substitute_many(subs);
  return g;
}

} // namespace

std::vector<Cochain> solve_cochain_space(const Algebra& A, const RepModule& M, int n,
                                         Parity theta, int deg)
{
  if (deg < 0) return {};
  ParamPool pool;
  CochainAnsatz ans = make_cochain_ansatz(A, M, n, theta, deg, pool);
  EquationCollector eqs(ans.params);
  add_cochain_constraints(A, M, ans.shape, eqs);
  std::vector<Cochain> basis;
  for (const auto& v : eqs.kernel()) basis.push_back(instantiate_cochain(ans, v));
  return basis;
}

Cochain cochain_span_generic(const std::vector<Cochain>& basis, ParamPool& pool)
{
  if (basis.empty()) return Cochain{};
  Cochain g = basis.front();
  for (auto& v : g.table)
    for (auto& p : v.c) p = Poly();
  for (const auto& member : basis) {
    Poly c = Poly::var(pool.fresh());
    for (size_t i = 0; i < g.table.size(); ++i)
      for (size_t u = 0; u < g.table[i].c.size(); ++u)
        g.table[i].c[u] += c * member.table[i].c[u];
  }
  return g;
}

std::vector<Cochain> solve_cocycles(const Algebra& A, const RepModule& M, int n,
                                    Parity theta, int deg, const DiffConvention& cv)
{
  if (deg < 0) return {};
  ParamPool pool;
  CochainAnsatz ans = make_cochain_ansatz(A, M, n, theta, deg, pool);
  EquationCollector eqs(ans.params);
  add_cochain_constraints(A, M, ans.shape, eqs);
  Cochain d = differential(A, M, ans.shape, cv);
  for (const auto& v : d.table) eqs.add_all(v.c);
  std::vector<Cochain> basis;
  for (const auto& v : eqs.kernel()) basis.push_back(instantiate_cochain(ans, v));
  return basis;
}

CohomologyReport truncated_cohomology_report(const Algebra& A, const RepModule& M, int n,
                                             Parity theta, int deg, const DiffConvention& cv)
{
  CohomologyReport rep;
  rep.n = n;
  rep.theta = theta;
  rep.degree = deg;
  rep.ambient_degree = deg + std::max(A.max_table_degree(), M.max_table_degree());

  auto cocycle_dim_at = [&](int dd) -> size_t {
    ParamPool pool;
    CochainAnsatz ans = make_cochain_ansatz(A, M, n, theta, dd, pool);
    EquationCollector eqs(ans.params);
    add_cochain_constraints(A, M, ans.shape, eqs);
    Cochain d = differential(A, M, ans.shape, cv);
    for (const auto& v : d.table) eqs.add_all(v.c);
    return eqs.kernel().size();
  };
  rep.cocycle_dim = cocycle_dim_at(deg);
  rep.ambient_cocycle_dim = cocycle_dim_at(rep.ambient_degree);

  if (n >= 1) {
    std::vector<Cochain> prev = solve_cochain_space(A, M, n - 1, theta, deg);
    // coordinates of the images in the ambient monomial space
    std::map<std::tuple<size_t, size_t, Monomial>, size_t> columns;
    std::vector<std::map<size_t, Scalar>> rows;
    for (const auto& c : prev) {
      Cochain d = differential(A, M, c, cv);
      std::map<size_t, Scalar> row;
      for (size_t flat = 0; flat < d.table.size(); ++flat)
        for (size_t u = 0; u < d.table[flat].c.size(); ++u)
          d.table[flat].c[u].for_each([&](const Monomial& m, const Scalar& s) {
            auto key = std::make_tuple(flat, u, m);
            auto [it, added] = columns.emplace(key, columns.size());
            row[it->second] = s;
          });
      rows.push_back(std::move(row));
    }
    MatrixQ img(rows.size(), columns.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (const auto& [j, s] : rows[i]) img.at(i, j) = s;
    rep.coboundary_dim = rref(img).rank;
  }
  rep.indicator_dim = rep.ambient_cocycle_dim - rep.coboundary_dim;
  return rep;
}

ConventionSearch resolve_convention(const Algebra& A, const RepModule& M, int deg)
{
  // minimal deviations from the literal display first
  std::vector<DiffConvention> variants;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e)
          for (int z = 0; z < 2; ++z)
            variants.push_back({a != 0, b != 0, c != 0, e != 0, z != 0});
  std::stable_sort(variants.begin(), variants.end(),
                   [](const DiffConvention& l, const DiffConvention& r) {
                     auto weight = [](const DiffConvention& c) {
                       return static_cast<int>(c.first_sign_split) +
                              static_cast<int>(c.power_full) +
                              static_cast<int>(c.second_sum_gamma) +
                              static_cast<int>(c.first_sum_beta_args) +
                              static_cast<int>(c.zero_rule_general);
                     };
                     return weight(l) < weight(r);
                   });

  for (const auto& cv : variants) {
    bool ok = true;
    for (Parity theta : {Parity::even, Parity::odd}) {
      for (int n : {0, 1}) {
        ParamPool pool;
        std::vector<Cochain> basis =
            solve_cochain_space(A, M, n, theta, n == 0 ? std::max(3, deg) : deg);
        if (basis.empty()) continue;
        Cochain g = cochain_span_generic(basis, pool);
        if (!check_d_squared(A, M, g, cv).ok()) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      DiffConvention literal{};
      return {cv, cv == literal, true};
    }
  }
  return {DiffConvention{}, false, false};
}

} // namespace bhc
