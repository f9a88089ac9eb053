#include "bhc/constructions.hpp"

#include <set>

namespace bhc {

namespace {

void require(bool ok, const char* identity, const std::string& detail)
{
  if (!ok) throw HypothesisViolation(identity, detail);
}

void require_check(const CheckReport& rep, const char* identity)
{
  if (rep.ok()) return;
  const Violation& v = rep.violations.front();
  std::string where;
  for (const auto& n : v.where) where += (where.empty() ? "" : ",") + n;
  throw HypothesisViolation(identity, "axiom " + v.axiom + " fails at (" + where + ")");
}

void require_multiplicative(const ConformalTable& R, const EndoMap& f, const char* identity)
{
  for (size_t i = 0; i < R.rank(); ++i)
    for (size_t j = 0; j < R.rank(); ++j) {
      LValue lhs = f.apply(R.table[i][j]);
      LValue rhs = R.eval(f.column(i), f.column(j), 1);
      if (!(lhs == rhs))
        throw HypothesisViolation(identity, "not multiplicative at (" + R.names[i] + "," +
                                                R.names[j] + ")");
    }
}

EndoMap from_scalar(const MatrixQ& m)
{
  MatrixP p(m.rows(), std::vector<Poly>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) p[i][j] = Poly(m.at(i, j));
  return EndoMap(p);
}

} // namespace

Algebra cur(const SuperAlgebraFD& g)
{
  require(g.maps_even(), "cur-maps-even", "alpha or beta mixes parities");
  require(g.maps_commute(), "cur-maps-commute", "alpha and beta do not commute");
  Algebra A;
  A.names = g.names;
  A.parity = g.parity;
  A.alpha = from_scalar(g.alpha);
  A.beta = from_scalar(g.beta);
  size_t n = g.dim();
  A.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) A.table[i][j].c[k] = Poly(g.c[i][j][k]);
  return A;
}

Algebra tensor_superalgebra(const Algebra& R, const SuperAlgebraFD& B)
{
  require(R.alpha.is_identity() && R.beta.is_identity(), "tensor-untwisted",
          "left factor must carry identity structure maps");
  require_check(check_algebra(R), "tensor-left-axioms");
  require(B.is_supercommutative(), "tensor-supercommutative", "product is not supercommutative");
  require(B.is_associative(), "tensor-associative", "product is not associative");
  size_t nb = B.dim();
  {
    MatrixQ id(nb, nb);
    for (size_t i = 0; i < nb; ++i) id.at(i, i) = 1;
    bool ident = true;
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = 0; j < nb; ++j)
        if (B.alpha.at(i, j) != id.at(i, j) || B.beta.at(i, j) != id.at(i, j)) ident = false;
    require(ident, "tensor-b-untwisted", "superalgebra factor must carry identity maps");
  }

  size_t nr = R.rank();
  Algebra T;
  for (size_t i = 0; i < nr; ++i)
    for (size_t p = 0; p < nb; ++p) {
      T.names.push_back(R.names[i] + "_" + B.names[p]);
      T.parity.push_back(R.parity[i] + B.parity[p]);
    }
  size_t n = nr * nb;
  T.alpha = EndoMap::identity(n);
  T.beta = EndoMap::identity(n);
  T.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  auto flat = [nb](size_t i, size_t p) { return i * nb + p; };
  for (size_t i = 0; i < nr; ++i)
    for (size_t p = 0; p < nb; ++p)
      for (size_t j = 0; j < nr; ++j)
        for (size_t q = 0; q < nb; ++q) {
          int sg = parity_sign(B.parity[p], R.parity[j]);
          for (size_t k = 0; k < nr; ++k) {
            if (R.table[i][j].c[k].is_zero()) continue;
            for (size_t s = 0; s < nb; ++s) {
              Scalar coeff = B.c[p][q][s];
              if (sg < 0) coeff = -coeff;
              T.table[flat(i, p)][flat(j, q)].c[flat(k, s)] +=
                  Poly(coeff) * R.table[i][j].c[k];
            }
          }
        }
  return T;
}

Algebra yau_twist(const Algebra& R, const EndoMap& f, const EndoMap& g)
{
  require(R.alpha.is_identity() && R.beta.is_identity(), "twist-untwisted",
          "input must carry identity structure maps");
  require_check(check_algebra(R), "twist-input-axioms");
  require(f.is_even(R.parity), "twist-f-even", "f mixes parities");
  require(g.is_even(R.parity), "twist-g-even", "g mixes parities");
  require(f.commutes_with(g), "twist-fg-commute", "f and g do not commute");
  require_multiplicative(R, f, "twist-f-multiplicative");
  require_multiplicative(R, g, "twist-g-multiplicative");

  Algebra T;
  T.names = R.names;
  T.parity = R.parity;
  T.alpha = f;
  T.beta = g;
  size_t n = R.rank();
  T.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) T.table[i][j] = R.eval(f.column(i), g.column(j), 1);
  return T;
}

Algebra composition_twist(const Algebra& R, const EndoMap& f, const EndoMap& g)
{
  require_check(check_algebra(R), "compose-input-axioms");
  require(f.is_even(R.parity), "compose-f-even", "f mixes parities");
  require(g.is_even(R.parity), "compose-g-even", "g mixes parities");
  const EndoMap* maps[4] = {&R.alpha, &R.beta, &f, &g};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      require(maps[a]->commutes_with(*maps[b]), "compose-commute",
              "the four structure maps must pairwise commute");
  require_multiplicative(R, f, "compose-f-multiplicative");
  require_multiplicative(R, g, "compose-g-multiplicative");

  Algebra T;
  T.names = R.names;
  T.parity = R.parity;
  T.alpha = R.alpha.compose(f);
  T.beta = R.beta.compose(g);
  size_t n = R.rank();
  T.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) T.table[i][j] = R.eval(f.column(i), g.column(j), 1);
  return T;
}

Algebra power_twist(const Algebra& R, int k)
{
  require(k >= 0, "power-twist-exponent", "negative power");
  return composition_twist(R, R.alpha.power(k), R.beta.power(k));
}

Algebra direct_sum(const Algebra& R, const Algebra& S)
{
  std::set<std::string> left(R.names.begin(), R.names.end());
  bool clash = false;
  for (const auto& n : S.names)
    if (left.count(n)) clash = true;

  Algebra T;
  size_t nr = R.rank(), ns = S.rank(), n = nr + ns;
  for (size_t i = 0; i < nr; ++i) T.names.push_back(clash ? "a_" + R.names[i] : R.names[i]);
  for (size_t i = 0; i < ns; ++i) T.names.push_back(clash ? "b_" + S.names[i] : S.names[i]);
  T.parity = R.parity;
  T.parity.insert(T.parity.end(), S.parity.begin(), S.parity.end());

  MatrixP alpha(n, std::vector<Poly>(n)), beta(n, std::vector<Poly>(n));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j) {
      alpha[i][j] = R.alpha.m[i][j];
      beta[i][j] = R.beta.m[i][j];
    }
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j) {
      alpha[nr + i][nr + j] = S.alpha.m[i][j];
      beta[nr + i][nr + j] = S.beta.m[i][j];
    }
  T.alpha = EndoMap(alpha);
  T.beta = EndoMap(beta);

  T.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j)
      for (size_t k = 0; k < nr; ++k) T.table[i][j].c[k] = R.table[i][j].c[k];
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j)
      for (size_t k = 0; k < ns; ++k) T.table[nr + i][nr + j].c[nr + k] = S.table[i][j].c[k];
  return T;
}

Algebra from_associative(const AssocConformal& A)
{
  require_check(check_associative(A), "assoc-axioms");
  require(A.alpha.commutes_with(A.beta), "assoc-maps-commute", "alpha and beta do not commute");
  auto ai = A.alpha.inverse();
  auto bi = A.beta.inverse();
  require(ai.has_value(), "regular-alpha", "alpha is not invertible over Q[d]");
  require(bi.has_value(), "regular-beta", "beta is not invertible over Q[d]");
  EndoMap ainv_b = ai->compose(A.beta);
  EndoMap a_binv = A.alpha.compose(*bi);

  Algebra T;
  T.names = A.names;
  T.parity = A.parity;
  T.alpha = A.alpha;
  T.beta = A.beta;
  size_t n = A.rank();
  T.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  Poly skew = -poly_slot(1) - poly_d();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      LValue t1 = A.eval(A.unit(i), A.unit(j), 1);
      LValue t2 =
          A.eval(ainv_b.column(j), a_binv.column(i), 2).substitute(sym_slot(2), skew);
      int sg = parity_sign(A.parity[i], A.parity[j]);
      T.table[i][j] = sg < 0 ? t1 + t2 : t1 - t2;
    }
  return T;
}

Algebra semidirect(const Algebra& R, const RepModule& M)
{
  require_check(check_algebra(R), "semidirect-algebra-axioms");
  require_check(check_module(R, M), "semidirect-module-axioms");
  require(R.is_regular(), "semidirect-regular-algebra", "alpha or beta not invertible");
  require(M.is_regular(), "semidirect-regular-module", "phi or psi not invertible");
  EndoMap ainv_b = R.alpha.inverse()->compose(R.beta);
  EndoMap phi_psinv = M.phi.compose(*M.psi.inverse());

  std::set<std::string> left(R.names.begin(), R.names.end());
  bool clash = false;
  for (const auto& n : M.names)
    if (left.count(n)) clash = true;

  Algebra T;
  size_t nr = R.rank(), nm = M.rank(), n = nr + nm;
  T.names = R.names;
  for (const auto& name : M.names) T.names.push_back(clash ? "m_" + name : name);
  T.parity = R.parity;
  T.parity.insert(T.parity.end(), M.parity.begin(), M.parity.end());

  MatrixP alpha(n, std::vector<Poly>(n)), beta(n, std::vector<Poly>(n));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j) {
      alpha[i][j] = R.alpha.m[i][j];
      beta[i][j] = R.beta.m[i][j];
    }
  for (size_t i = 0; i < nm; ++i)
    for (size_t j = 0; j < nm; ++j) {
      alpha[nr + i][nr + j] = M.phi.m[i][j];
      beta[nr + i][nr + j] = M.psi.m[i][j];
    }
  T.alpha = EndoMap(alpha);
  T.beta = EndoMap(beta);

  auto embed = [&](const LValue& v, size_t offset) {
    LValue r(v.arity, n);
    for (size_t k = 0; k < v.rank(); ++k) r.c[offset + k] = v.c[k];
    return r;
  };

  T.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
  Poly skew = -poly_d() - poly_slot(1);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j) T.table[i][j] = embed(R.table[i][j], 0);
  for (size_t i = 0; i < nr; ++i)
    for (size_t u = 0; u < nm; ++u)
      T.table[i][nr + u] = embed(module_act(M, R.unit(i), M.unit(u), 1), nr);
  for (size_t u = 0; u < nm; ++u)
    for (size_t j = 0; j < nr; ++j) {
      LValue v = module_act(M, LValue::from_element(ainv_b.column(j)),
                            LValue::from_element(phi_psinv.column(u)), 2)
                     .substitute(sym_slot(2), skew);
      int sg = parity_sign(R.parity[j], M.parity[u]);
      T.table[nr + u][j] = embed(sg < 0 ? v : -v, nr);
    }
  return T;
}

} // namespace bhc
