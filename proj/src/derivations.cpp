#include "bhc/derivations.hpp"

#include <stdexcept>

namespace bhc {

namespace {

// [f_x1(e_i) _{x1+x2} m(e_j)]
LValue bracket_f_first(const Algebra& A, const ConfMap& f, const EndoMap& m, size_t i,
                       size_t j)
{
  return A.eval(f.column(i), LValue::from_element(m.column(j)), 3)
      .substitute(sym_slot(3), poly_slot(1) + poly_slot(2));
}

// [m(e_i) _x2 f_x1(e_j)]
LValue bracket_f_second(const Algebra& A, const ConfMap& f, const EndoMap& m, size_t i,
                        size_t j)
{
  return A.eval(LValue::from_element(m.column(i)), f.column(j), 2);
}

// f_x1([e_i _x2 e_j])
LValue f_of_bracket(const Algebra& A, const ConfMap& f, size_t i, size_t j)
{
  return confmap_apply(f, A.eval(A.unit(i), A.unit(j), 2), poly_slot(1));
}

int sign_exp(const ConfMap& f, const Algebra& A, size_t i)
{
  return static_cast<int>(f.parity) * static_cast<int>(A.parity[i]);
}

LValue with_sign(LValue v, int exp2) { return (exp2 & 1) ? -v : v; }

void omega_violations(const Algebra& A, const ConfMap& f, CheckReport& rep)
{
  ConfMap ra = compose_map_endo(f, A.alpha) - compose_endo_map(A.alpha, f);
  ConfMap rb = compose_map_endo(f, A.beta) - compose_endo_map(A.beta, f);
  for (size_t i = 0; i < A.rank(); ++i) {
    rep.add("omega-alpha", {A.names[i]}, ra.column(i));
    rep.add("omega-beta", {A.names[i]}, rb.column(i));
  }
}

struct ConfMapAnsatz {
  ConfMap shape;
  std::vector<SymId> params;
};

void enum_deg2_monomials(int deg, std::vector<Poly>& out)
{
  for (int total = 0; total <= deg; ++total)
    for (int kd = total; kd >= 0; --kd)
      out.push_back(poly_d().pow(kd) * poly_slot(1).pow(total - kd));
}

ConfMapAnsatz make_confmap_ansatz(const Algebra& A, Parity theta, int deg, ParamPool& pool)
{
  ConfMapAnsatz out;
  out.shape = ConfMap::zero(A.rank(), theta);
  if (deg < 0) return out;
  size_t before = pool.all().size();
  std::vector<Poly> mons;
  enum_deg2_monomials(deg, mons);
  for (size_t j = 0; j < A.rank(); ++j)
    for (size_t i = 0; i < A.rank(); ++i) {
      if (A.parity[j] != A.parity[i] + theta) continue;
      for (const auto& m : mons) out.shape.entries[j][i] += Poly::var(pool.fresh()) * m;
    }
  out.params.assign(pool.all().begin() + static_cast<long>(before), pool.all().end());
  return out;
}

ConfMap instantiate_confmap(const ConfMapAnsatz& ans, const VectorQ& values, size_t offset = 0)
{
  ConfMap f = ans.shape;
  std::map<SymId, Poly> subs;
  for (size_t i = 0; i < ans.params.size(); ++i)
    subs.emplace(ans.params[i], Poly(values[offset + i]));
  for (auto& row : f.entries)
    for (auto& p : row) p = p.substitute_many(subs);
  return f;
}

void add_omega_equations(const Algebra& A, const ConfMap& f, EquationCollector& eqs)
{
  ConfMap ra = compose_map_endo(f, A.alpha) - compose_endo_map(A.alpha, f);
  ConfMap rb = compose_map_endo(f, A.beta) - compose_endo_map(A.beta, f);
  for (const auto& row : ra.entries) eqs.add_all(row);
  for (const auto& row : rb.entries) eqs.add_all(row);
}

} // namespace

CheckReport is_derivation(const Algebra& A, const ConfMap& f, int k, int l)
{
  if (k < 0 || l < 0) throw std::invalid_argument("is_derivation: exponents must be >= 0");
  CheckReport rep;
  omega_violations(A, f, rep);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue res = f_of_bracket(A, f, i, j) - bracket_f_first(A, f, m, i, j) -
                   with_sign(bracket_f_second(A, f, m, i, j), sign_exp(f, A, i));
      rep.add("leibniz", {A.names[i], A.names[j]}, res);
    }
  return rep;
}

ConfMap inner_derivation(const Algebra& A, const Element& a, int k, int l)
{
  if (!(A.alpha.apply(a) == a) || !(A.beta.apply(a) == a))
    throw HypothesisViolation("inner-fixed-point", "element is not fixed by alpha and beta");
  auto par = a.homogeneous_parity(A.parity);
  if (!par) throw HypothesisViolation("inner-homogeneous", "element is not homogeneous");
  EndoMap m;
  if (l >= 1) {
    m = A.alpha.power(k + 1).compose(A.beta.power(l - 1));
  } else {
    auto binv = A.beta.inverse();
    if (!binv)
      throw HypothesisViolation("inner-beta-regular",
                                "exponent l = 0 needs an invertible beta");
    m = A.alpha.power(k + 1).compose(*binv);
  }
  ConfMap f = ConfMap::zero(A.rank(), *par);
  for (size_t j = 0; j < A.rank(); ++j) {
    LValue col = A.eval(LValue::from_element(a), LValue::from_element(m.column(j)), 1);
    for (size_t i = 0; i < A.rank(); ++i) f.entries[i][j] = col.c[i];
  }
  return f;
}

std::vector<ConfMap> solve_derivations(const Algebra& A, int k, int l, Parity theta, int deg)
{
  if (deg < 0) return {};
  ParamPool pool;
  ConfMapAnsatz ans = make_confmap_ansatz(A, theta, deg, pool);
  EquationCollector eqs(ans.params);
  add_omega_equations(A, ans.shape, eqs);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue res = f_of_bracket(A, ans.shape, i, j) -
                   bracket_f_first(A, ans.shape, m, i, j) -
                   with_sign(bracket_f_second(A, ans.shape, m, i, j),
                             sign_exp(ans.shape, A, i));
      eqs.add_all(res.c);
    }
  std::vector<ConfMap> basis;
  for (const auto& v : eqs.kernel()) basis.push_back(instantiate_confmap(ans, v));
  return basis;
}

ClassifyFlags classify_map(const Algebra& A, const ConfMap& f, int k, int l)
{
  ClassifyFlags flags{true, true, true};
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue e1 = bracket_f_first(A, f, m, i, j);
      LValue e2 = with_sign(bracket_f_second(A, f, m, i, j), sign_exp(f, A, i));
      LValue e3 = f_of_bracket(A, f, i, j);
      if (!(e1 - e3).is_zero() || !(e2 - e3).is_zero()) flags.centroid = false;
      if (!(e1 - e2).is_zero()) flags.quasicentroid = false;
      if (!e1.is_zero() || !e3.is_zero()) flags.central_derivation = false;
    }
  return flags;
}

std::optional<DerivationWitness> witness_generalized(const Algebra& A, const ConfMap& f,
                                                     int k, int l, int deg,
                                                     bool force_zero_second)
{
  ParamPool pool;
  ConfMapAnsatz fp = make_confmap_ansatz(A, f.parity, deg, pool);
  size_t fp_count = fp.params.size();
  ConfMapAnsatz fpp;
  if (force_zero_second) {
    fpp.shape = ConfMap::zero(A.rank(), f.parity);
  } else {
    fpp = make_confmap_ansatz(A, f.parity, deg, pool);
  }
  EquationCollector eqs(pool.all());
  add_omega_equations(A, fp.shape, eqs);
  if (!force_zero_second) add_omega_equations(A, fpp.shape, eqs);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue res = bracket_f_first(A, f, m, i, j) +
                   with_sign(bracket_f_second(A, fp.shape, m, i, j), sign_exp(f, A, i)) -
                   f_of_bracket(A, fpp.shape, i, j);
      eqs.add_all(res.c);
    }
  auto sol = eqs.solve();
  if (!sol) return std::nullopt;
  DerivationWitness w;
  w.k = k;
  w.l = l;
  w.fprime = instantiate_confmap(fp, sol->particular, 0);
  w.fsecond = force_zero_second ? fpp.shape
                                : instantiate_confmap(fpp, sol->particular, fp_count);
  return w;
}

namespace {

std::vector<ConfMap> solve_with_identities(const Algebra& A, int k, int l, Parity theta,
                                           int deg, bool want_centroid, bool want_qc,
                                           bool want_zder)
{
  if (deg < 0) return {};
  ParamPool pool;
  ConfMapAnsatz ans = make_confmap_ansatz(A, theta, deg, pool);
  EquationCollector eqs(ans.params);
  add_omega_equations(A, ans.shape, eqs);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue e1 = bracket_f_first(A, ans.shape, m, i, j);
      LValue e2 = with_sign(bracket_f_second(A, ans.shape, m, i, j),
                            sign_exp(ans.shape, A, i));
      LValue e3 = f_of_bracket(A, ans.shape, i, j);
      if (want_centroid) {
        eqs.add_all((e1 - e3).c);
        eqs.add_all((e2 - e3).c);
      }
      if (want_qc) eqs.add_all((e1 - e2).c);
      if (want_zder) {
        eqs.add_all(e1.c);
        eqs.add_all(e3.c);
      }
    }
  std::vector<ConfMap> basis;
  for (const auto& v : eqs.kernel()) basis.push_back(instantiate_confmap(ans, v));
  return basis;
}

} // namespace

std::vector<GDerTriple> solve_generalized_derivations(const Algebra& A, int k, int l,
                                                      Parity theta, int deg)
{
  if (deg < 0) return {};
  ParamPool pool;
  ConfMapAnsatz f = make_confmap_ansatz(A, theta, deg, pool);
  size_t f_count = f.params.size();
  ConfMapAnsatz fp = make_confmap_ansatz(A, theta, deg, pool);
  size_t fp_count = fp.params.size();
  ConfMapAnsatz fpp = make_confmap_ansatz(A, theta, deg, pool);
  EquationCollector eqs(pool.all());
  add_omega_equations(A, f.shape, eqs);
  add_omega_equations(A, fp.shape, eqs);
  add_omega_equations(A, fpp.shape, eqs);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue res = bracket_f_first(A, f.shape, m, i, j) +
                   with_sign(bracket_f_second(A, fp.shape, m, i, j),
                             sign_exp(f.shape, A, i)) -
                   f_of_bracket(A, fpp.shape, i, j);
      eqs.add_all(res.c);
    }
  std::vector<GDerTriple> out;
  for (const auto& v : eqs.kernel())
    out.push_back({instantiate_confmap(f, v, 0), instantiate_confmap(fp, v, f_count),
                   instantiate_confmap(fpp, v, f_count + fp_count)});
  return out;
}

std::optional<ConfMap> quasider_companion(const Algebra& A, const ConfMap& h, int k, int l,
                                          int deg)
{
  ParamPool pool;
  ConfMapAnsatz hp = make_confmap_ansatz(A, h.parity, deg, pool);
  EquationCollector eqs(pool.all());
  add_omega_equations(A, hp.shape, eqs);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue res = bracket_f_first(A, h, m, i, j) +
                   with_sign(bracket_f_second(A, h, m, i, j), sign_exp(h, A, i)) -
                   f_of_bracket(A, hp.shape, i, j);
      eqs.add_all(res.c);
    }
  auto sol = eqs.solve();
  if (!sol) return std::nullopt;
  return instantiate_confmap(hp, sol->particular, 0);
}

std::vector<ConfMap> solve_centroids(const Algebra& A, int k, int l, Parity theta, int deg)
{
  return solve_with_identities(A, k, l, theta, deg, true, false, false);
}

std::vector<ConfMap> solve_quasicentroids(const Algebra& A, int k, int l, Parity theta,
                                          int deg)
{
  return solve_with_identities(A, k, l, theta, deg, false, true, false);
}

std::vector<ConfMap> solve_central_derivations(const Algebra& A, int k, int l, Parity theta,
                                               int deg)
{
  return solve_with_identities(A, k, l, theta, deg, false, false, true);
}

std::vector<std::pair<ConfMap, ConfMap>> solve_quasiderivations(const Algebra& A, int k,
                                                                int l, Parity theta, int deg)
{
  if (deg < 0) return {};
  ParamPool pool;
  ConfMapAnsatz f = make_confmap_ansatz(A, theta, deg, pool);
  size_t f_count = f.params.size();
  ConfMapAnsatz fp = make_confmap_ansatz(A, theta, deg, pool);
  EquationCollector eqs(pool.all());
  add_omega_equations(A, f.shape, eqs);
  add_omega_equations(A, fp.shape, eqs);
  EndoMap m = A.alpha.power(k).compose(A.beta.power(l));
  for (size_t i = 0; i < A.rank(); ++i)
    for (size_t j = 0; j < A.rank(); ++j) {
      LValue res = bracket_f_first(A, f.shape, m, i, j) +
                   with_sign(bracket_f_second(A, f.shape, m, i, j),
                             sign_exp(f.shape, A, i)) -
                   f_of_bracket(A, fp.shape, i, j);
      eqs.add_all(res.c);
    }
  std::vector<std::pair<ConfMap, ConfMap>> out;
  for (const auto& v : eqs.kernel())
    out.emplace_back(instantiate_confmap(f, v, 0), instantiate_confmap(fp, v, f_count));
  return out;
}

ConfMap confmap_span_generic(const std::vector<ConfMap>& basis, ParamPool& pool)
{
  if (basis.empty()) return ConfMap{};
  ConfMap g = ConfMap::zero(basis.front().rank(), basis.front().parity);
  for (const auto& member : basis) {
    Poly c = Poly::var(pool.fresh());
    for (size_t i = 0; i < g.rank(); ++i)
      for (size_t j = 0; j < g.rank(); ++j) g.entries[i][j] += c * member.entries[i][j];
  }
  return g;
}

} // namespace bhc
