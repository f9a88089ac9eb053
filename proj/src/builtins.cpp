#include "bhc/builtins.hpp"

namespace bhc {

namespace {

LValue value1(size_t rank, size_t comp, const Poly& p)
{
  LValue v(1, rank);
  v.c[comp] = p;
  return v;
}

} // namespace

Algebra make_virasoro_ns(const Poly& f, const Poly& g)
{
  Algebra A;
  A.names = {"L", "E"};
  A.parity = {Parity::even, Parity::odd};
  MatrixP alpha = identity_p(2);
  alpha[0][0] = f;
  alpha[1][1] = g;
  A.alpha = EndoMap(alpha);
  A.beta = EndoMap::identity(2);
  Poly dd = poly_d(), xx = poly_slot(1);
  A.table.assign(2, std::vector<LValue>(2, LValue(1, 2)));
  A.table[0][0] = value1(2, 0, dd + Poly(2) * xx);
  A.table[0][1] = value1(2, 1, dd + Poly(scalar(3, 2)) * xx);
  A.table[1][0] = value1(2, 1, Poly(scalar(1, 2)) * dd + Poly(scalar(3, 2)) * xx);
  return A;
}

Algebra make_ex25()
{
  Algebra A;
  A.names = {"e1", "e2", "e3"};
  A.parity = {Parity::even, Parity::odd, Parity::odd};
  MatrixP alpha(3, std::vector<Poly>(3));
  alpha[0][0] = Poly(1);
  alpha[2][1] = Poly(1); // e2 -> e3
  alpha[1][2] = Poly(1); // e3 -> e2
  MatrixP beta(3, std::vector<Poly>(3));
  beta[0][0] = Poly(1);
  beta[2][1] = Poly(-1); // e2 -> -e3
  beta[1][2] = Poly(-1); // e3 -> -e2
  A.alpha = EndoMap(alpha);
  A.beta = EndoMap(beta);
  A.table.assign(3, std::vector<LValue>(3, LValue(1, 3)));
  A.table[1][2] = value1(3, 0, Poly(1)); // [e2_x e3] = e1
  A.table[2][1] = value1(3, 0, Poly(1)); // [e3_x e2] = e1, forced by skew-symmetry
  return A;
}

AssocConformal make_cur_gl11()
{
  // Basis E11, E22, E12, E21 with E_{ij} E_{kl} = delta_{jk} E_{il};
  // the lambda-product of the current construction is the constant table.
  AssocConformal A;
  A.names = {"E11", "E22", "E12", "E21"};
  A.parity = {Parity::even, Parity::even, Parity::odd, Parity::odd};
  A.alpha = EndoMap::identity(4);
  A.beta = EndoMap::identity(4);
  A.table.assign(4, std::vector<LValue>(4, LValue(1, 4)));
  auto idx = [](int i, int j) { return i == j ? i - 1 : (i == 1 ? 2 : 3); };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          if (j == k) A.table[idx(i, j)][idx(k, l)].c[idx(i, l)] += Poly(1);
  return A;
}

} // namespace bhc
