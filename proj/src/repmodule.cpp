#include "bhc/repmodule.hpp"

namespace bhc {

int RepModule::max_table_degree() const
{
  int d = 0;
  for (const auto& row : rho)
    for (const auto& v : row)
      for (const auto& p : v.c) d = std::max(d, p.total_degree());
  return d;
}

LValue module_act(const RepModule& M, const LValue& r, const LValue& v, int slot)
{
  return conf_eval_pair(M.rho, M.rank(), r, v, slot);
}

LValue module_act(const RepModule& M, const Element& r, const Element& v, int slot)
{
  return module_act(M, LValue::from_element(r), LValue::from_element(v), slot);
}

CheckReport check_module(const Algebra& A, const RepModule& M, int slot0)
{
  CheckReport rep;
  size_t na = A.rank(), nm = M.rank();
  int s1 = slot0, s2 = slot0 + 1, s3 = slot0 + 2;
  Poly x = poly_slot(s1);

  for (size_t u = 0; u < nm; ++u) {
    rep.add("phi-even", {M.names[u]},
            LValue::from_element(M.phi.odd_part_of_column(u, M.parity)));
    rep.add("psi-even", {M.names[u]},
            LValue::from_element(M.psi.odd_part_of_column(u, M.parity)));
  }
  EndoMap pq = M.phi.compose(M.psi), qp = M.psi.compose(M.phi);
  for (size_t u = 0; u < nm; ++u)
    rep.add("phi-psi-commute", {M.names[u]}, LValue::from_element(pq.column(u) - qp.column(u)));

  for (size_t i = 0; i < na; ++i) {
    for (size_t u = 0; u < nm; ++u) {
      const LValue entry =
          s1 == 1 ? M.rho[i][u] : M.rho[i][u].substitute(sym_slot(1), poly_slot(s1));

      LValue bad(entry.arity, nm);
      Parity want = A.parity[i] + M.parity[u];
      for (size_t k = 0; k < nm; ++k)
        if (M.parity[k] != want) bad.c[k] = entry.c[k];
      rep.add("grading", {A.names[i], M.names[u]}, bad);

      Element da(na), dm(nm);
      da.c[i] = poly_d();
      dm.c[u] = poly_d();
      rep.add("sesquilinearity", {A.names[i], M.names[u]},
              module_act(M, da, M.unit(u), s1) + x * entry);
      rep.add("sesquilinearity", {A.names[i], M.names[u]},
              module_act(M, Element::unit(na, i), dm, s1) - (poly_d() + x) * entry);

      rep.add("phi-intertwine", {A.names[i], M.names[u]},
              M.phi.apply(entry) -
                  module_act(M, A.alpha.column(i), M.phi.column(u), s1));
      rep.add("psi-intertwine", {A.names[i], M.names[u]},
              M.psi.apply(entry) -
                  module_act(M, A.beta.column(i), M.psi.column(u), s1));
    }
  }

  for (size_t i = 0; i < na; ++i) {
    Element abi = A.alpha.apply(A.beta.column(i));
    for (size_t j = 0; j < na; ++j) {
      for (size_t u = 0; u < nm; ++u) {
        LValue w = A.eval(A.beta.column(i), A.unit(j), s1);
        LValue lhs = module_act(M, w, LValue::from_element(M.psi.column(u)), s3)
                         .substitute(sym_slot(s3), poly_slot(s1) + poly_slot(s2));
        LValue inner = module_act(M, LValue::from_element(A.unit(j)),
                                  LValue::from_element(M.unit(u)), s2);
        LValue rhs1 = module_act(M, LValue::from_element(abi), inner, s1);
        LValue inner2 = module_act(M, LValue::from_element(A.alpha.column(i)),
                                   LValue::from_element(M.unit(u)), s1);
        LValue rhs2 = module_act(M, LValue::from_element(A.beta.column(j)), inner2, s2);
        int sg = parity_sign(A.parity[i], A.parity[j]);
        LValue res = lhs - rhs1 + (sg < 0 ? -rhs2 : rhs2);
        rep.add("composition", {A.names[i], A.names[j], M.names[u]}, res);
      }
    }
  }
  return rep;
}

RepModule adjoint_module(const Algebra& A)
{
  RepModule M;
  M.names = A.names;
  M.parity = A.parity;
  M.phi = A.alpha;
  M.psi = A.beta;
  M.rho = A.table;
  return M;
}

RepModule trivial_module(const Algebra& A, std::vector<std::string> names,
                         std::vector<Parity> parity, EndoMap phi, EndoMap psi)
{
  RepModule M;
  M.names = std::move(names);
  M.parity = std::move(parity);
  M.phi = std::move(phi);
  M.psi = std::move(psi);
  M.rho.assign(A.rank(), std::vector<LValue>(M.names.size(), LValue(1, M.names.size())));
  return M;
}

RepModule current_module(const SuperRep& rep)
{
  RepModule M;
  M.names = rep.names;
  M.parity = rep.parity;
  size_t nm = rep.dim(), na = rep.rho.size();
  MatrixP phi(nm, std::vector<Poly>(nm)), psi(nm, std::vector<Poly>(nm));
  for (size_t i = 0; i < nm; ++i)
    for (size_t j = 0; j < nm; ++j) {
      phi[i][j] = Poly(rep.phi.at(i, j));
      psi[i][j] = Poly(rep.psi.at(i, j));
    }
  M.phi = EndoMap(phi);
  M.psi = EndoMap(psi);
  M.rho.assign(na, std::vector<LValue>(nm, LValue(1, nm)));
  for (size_t a = 0; a < na; ++a)
    for (size_t u = 0; u < nm; ++u)
      for (size_t v = 0; v < nm; ++v) M.rho[a][u].c[v] = Poly(rep.rho[a].at(v, u));
  return M;
}

} // namespace bhc
