#include "bhc/ooperator.hpp"

#include <stdexcept>

namespace bhc {

OOperator OOperator::zero(size_t alg_rank, size_t mod_rank)
{
  OOperator T;
  T.t.assign(alg_rank, std::vector<Poly>(mod_rank));
  return T;
}

Element OOperator::apply(const Element& m) const
{
  if (m.rank() != mod_rank()) throw std::invalid_argument("OOperator::apply: rank mismatch");
  Element r(alg_rank());
  for (size_t j = 0; j < alg_rank(); ++j)
    for (size_t u = 0; u < mod_rank(); ++u) r.c[j] += t[j][u] * m.c[u];
  return r;
}

LValue OOperator::apply(const LValue& v) const
{
  if (v.rank() != mod_rank()) throw std::invalid_argument("OOperator::apply: rank mismatch");
  LValue r(v.arity, alg_rank());
  for (size_t j = 0; j < alg_rank(); ++j)
    for (size_t u = 0; u < mod_rank(); ++u) r.c[j] += t[j][u] * v.c[u];
  return r;
}

namespace {

LValue rota_baxter_rhs_inner(const RepModule& M, const OOperator& T,
                             const EndoMap& phiinv_psi, const EndoMap& phi_psinv, size_t u,
                             size_t v)
{
  LValue first = module_act(M, LValue::from_element(T.apply(M.unit(u))),
                            LValue::from_element(M.unit(v)), 1);
  LValue second = module_act(M, LValue::from_element(T.apply(phiinv_psi.column(v))),
                             LValue::from_element(phi_psinv.column(u)), 2)
                      .substitute(sym_slot(2), -poly_slot(1) - poly_d());
  int sg = parity_sign(M.parity[u], M.parity[v]);
  return sg < 0 ? first + second : first - second;
}

} // namespace

CheckReport check_o_operator(const Algebra& A, const RepModule& M, const OOperator& T)
{
  CheckReport rep;
  auto phi_inv = M.phi.inverse();
  auto psi_inv = M.psi.inverse();
  if (!phi_inv || !psi_inv)
    throw std::invalid_argument("check_o_operator: phi and psi must be invertible");
  EndoMap phiinv_psi = phi_inv->compose(M.psi);
  EndoMap phi_psinv = M.phi.compose(*psi_inv);

  // T phi = alpha T and T psi = beta T, columnwise
  for (size_t u = 0; u < M.rank(); ++u) {
    Element tphi = T.apply(M.phi.column(u));
    Element alphat = A.alpha.apply(T.apply(M.unit(u)));
    rep.add("intertwine-phi", {M.names[u]}, LValue::from_element(tphi - alphat));
    Element tpsi = T.apply(M.psi.column(u));
    Element betat = A.beta.apply(T.apply(M.unit(u)));
    rep.add("intertwine-psi", {M.names[u]}, LValue::from_element(tpsi - betat));
  }

  for (size_t u = 0; u < M.rank(); ++u) {
    for (size_t v = 0; v < M.rank(); ++v) {
      LValue lhs = A.eval(T.apply(M.unit(u)), T.apply(M.unit(v)), 1);
      LValue rhs = T.apply(rota_baxter_rhs_inner(M, T, phiinv_psi, phi_psinv, u, v));
      rep.add("rota-baxter", {M.names[u], M.names[v]}, lhs - rhs);
    }
  }
  return rep;
}

Algebra induced_bracket(const Algebra& A, const RepModule& M, const OOperator& T)
{
  CheckReport rep = check_o_operator(A, M, T);
  if (!rep.ok())
    throw HypothesisViolation("induced-" + rep.violations.front().axiom,
                              "operator fails its defining identity");
  auto phi_inv = M.phi.inverse();
  auto psi_inv = M.psi.inverse();
  EndoMap phiinv_psi = phi_inv->compose(M.psi);
  EndoMap phi_psinv = M.phi.compose(*psi_inv);

  Algebra B;
  B.names = M.names;
  B.parity = M.parity;
  B.alpha = M.phi;
  B.beta = M.psi;
  B.table.assign(M.rank(), std::vector<LValue>(M.rank(), LValue(1, M.rank())));
  for (size_t u = 0; u < M.rank(); ++u)
    for (size_t v = 0; v < M.rank(); ++v)
      B.table[u][v] = rota_baxter_rhs_inner(M, T, phiinv_psi, phi_psinv, u, v);
  return B;
}

} // namespace bhc
