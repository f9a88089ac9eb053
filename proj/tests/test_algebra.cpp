#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/algebra.hpp"
#include "bhc/builtins.hpp"
#include "test_util.hpp"

#include <thread>

using namespace bhc;
using namespace bhc::testutil;

static Poly d() { return poly_d(); }
static Poly x(int i = 1) { return poly_slot(i); }

TEST_CASE("bracket evaluation on the rank-2 example")
{
  Algebra A = make_virasoro_ns();
  Element L = A.unit(0), E = A.unit(1);

  LValue LL = eval_bracket(A, L, L);
  CHECK(LL.c[0] == d() + Poly(2) * x());
  CHECK(LL.c[1].is_zero());

  // sesquilinearity in the left argument is forced: [dL_x L] = -x (d+2x) L
  Element dL(2);
  dL.c[0] = d();
  LValue dLL = eval_bracket(A, dL, L);
  CHECK(dLL.c[0] == -x() * (d() + Poly(2) * x()));

  // nested evaluation [L_x1 [L_x2 L]] = (d + x1 + 2 x2)(d + 2 x1) L
  LValue inner = eval_bracket(A, L, L, 2);
  LValue nested = eval_into(A, L, inner, 1);
  CHECK(nested.c[0] == (d() + x(1) + Poly(2) * x(2)) * (d() + Poly(2) * x(1)));
  CHECK(nested.c[1].is_zero());

  CHECK(eval_into(A, L, A.zero_value(), 1).is_zero());
  CHECK(eval_bracket(A, E, E).is_zero());
}

TEST_CASE("bracket evaluation on the rank-3 example")
{
  Algebra A = make_ex25();
  Element e1 = A.unit(0), e2 = A.unit(1), e3 = A.unit(2);

  LValue b23 = eval_bracket(A, e2, e3);
  CHECK(b23.c[0] == Poly(1));
  CHECK(b23.c[1].is_zero());
  CHECK(b23.c[2].is_zero());

  // [e2_x1 [e2_x2 e3]] = [e2_x1 e1] = 0
  LValue inner = eval_bracket(A, e2, e3, 2);
  CHECK(eval_into(A, e2, inner, 1).is_zero());
  CHECK(eval_bracket(A, e2, e1).is_zero());

  CHECK(A.alpha.apply(e2) == e3);
  CHECK(A.beta.apply(e2) == -e3);
  Element zero(3);
  CHECK(A.alpha.apply(zero).is_zero());
}

TEST_CASE("n-th products and the lambda-bracket reassembly")
{
  Algebra A = make_virasoro_ns();
  Element L = A.unit(0);
  Element p0 = nth_product(A, L, L, 0);
  CHECK(p0.c[0] == d());
  Element p1 = nth_product(A, L, L, 1);
  CHECK(p1.c[0] == Poly(2));
  CHECK(nth_product(A, L, L, 2).is_zero());
  CHECK(nth_product(A, L, L, -1).is_zero());

  for (const Algebra& alg : {make_virasoro_ns(), make_ex25()}) {
    for (size_t i = 0; i < alg.rank(); ++i) {
      for (size_t j = 0; j < alg.rank(); ++j) {
        LValue sum(1, alg.rank());
        Scalar fact(1);
        for (int n = 0; n <= alg.max_table_degree() + 1; ++n) {
          if (n > 0) fact *= n;
          Element prod = nth_product(alg, alg.unit(i), alg.unit(j), n);
          LValue tv = LValue::from_element(prod, 1);
          tv *= Poly(1 / fact) * x().pow(n);
          sum += tv;
        }
        CHECK(sum == eval_bracket(alg, alg.unit(i), alg.unit(j)));
      }
    }
  }
}

TEST_CASE("sesquilinearity against independent expansion")
{
  Rng rng(31);
  for (const Algebra& A : {make_virasoro_ns(), make_ex25()}) {
    for (int iter = 0; iter < 40; ++iter) {
      size_t i = rng() % A.rank(), j = rng() % A.rank();
      Poly p = random_poly(rng, {sym_d}, 3, 3);
      Poly q = random_poly(rng, {sym_d}, 3, 3);
      Element a(A.rank()), b(A.rank());
      a.c[i] = p;
      b.c[j] = q;
      LValue got = eval_bracket(A, a, b);
      // [p(d) e_i _x q(d) e_j] = p(-x) q(d+x) [e_i _x e_j]
      LValue want = A.table[i][j];
      want *= p.substitute(sym_d, -x()) * q.substitute(sym_d, d() + x());
      CHECK(got == want);

      // bilinearity over random elements
      Element a2(A.rank());
      a2.c[rng() % A.rank()] = random_poly(rng, {sym_d}, 2, 2);
      CHECK(eval_bracket(A, a + a2, b) == eval_bracket(A, a, b) + eval_bracket(A, a2, b));
    }
  }
}

TEST_CASE("axiom checker accepts the shipped examples")
{
  CHECK(check_algebra(make_virasoro_ns()).ok());
  CHECK(check_algebra(make_ex25()).ok());
}

TEST_CASE("axiom checker pinpoints the twisting that breaks skew-symmetry")
{
  Algebra bad = make_virasoro_ns(d(), Poly(1));
  CheckReport rep = check_algebra(bad);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& v : rep.violations) {
    if (v.axiom == "skew-symmetry" && v.where == std::vector<std::string>{"L", "L"}) {
      found = true;
      CHECK(v.residual.c[0] == (d() + Poly(2) * x()) * (d() + Poly(2) * x()));
      CHECK(v.residual.c[1].is_zero());
    }
  }
  CHECK(found);
}

TEST_CASE("zero bracket with commuting even maps is always accepted")
{
  Rng rng(17);
  for (int iter = 0; iter < 10; ++iter) {
    Algebra A;
    size_t n = 1 + rng() % 3;
    for (size_t i = 0; i < n; ++i) {
      A.names.push_back("g" + std::to_string(i));
      A.parity.push_back(rng() % 2 ? Parity::odd : Parity::even);
    }
    // beta = polynomial in alpha so the two commute; alpha diagonal in the
    // parity blocks so both maps stay even.
    MatrixP am = identity_p(n);
    for (size_t i = 0; i < n; ++i) am[i][i] = random_poly(rng, {sym_d}, 1, 2) + Poly(1);
    A.alpha = EndoMap(am);
    A.beta = A.alpha.compose(A.alpha);
    A.table.assign(n, std::vector<LValue>(n, LValue(1, n)));
    CHECK(check_algebra(A).ok());
  }
}

TEST_CASE("skew transform on table entries is an involution")
{
  Rng rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    LValue v(1, 3);
    for (auto& p : v.c) p = random_poly(rng, {sym_d, sym_slot(1)}, 3, 4);
    int sg = rng() % 2 ? -1 : 1;
    auto transform = [&](const LValue& w) {
      LValue r = w.substitute(sym_slot(1), -x() - d());
      if (sg < 0) r = -r;
      return r;
    };
    CHECK(transform(transform(v)) == v);
  }
}

TEST_CASE("check verdicts do not depend on the slot naming")
{
  for (int slot0 : {1, 4, 7}) {
    CheckReport a = check_algebra(make_ex25(), slot0);
    CHECK(a.ok());
    CheckReport b = check_algebra(make_virasoro_ns(d(), Poly(1)), slot0);
    CHECK(!b.ok());
    // residuals are normalized, so they are identical across slot choices
    CheckReport ref = check_algebra(make_virasoro_ns(d(), Poly(1)), 1);
    REQUIRE(b.violations.size() == ref.violations.size());
    for (size_t i = 0; i < b.violations.size(); ++i) {
      CHECK(b.violations[i].axiom == ref.violations[i].axiom);
      CHECK(b.violations[i].where == ref.violations[i].where);
      CHECK(b.violations[i].residual == ref.violations[i].residual);
    }
  }
}

TEST_CASE("associative checker accepts the current table and flags a perturbation")
{
  AssocConformal C = make_cur_gl11();
  CHECK(check_associative(C).ok());

  AssocConformal zero;
  zero.names = {"a", "b"};
  zero.parity = {Parity::even, Parity::odd};
  zero.alpha = EndoMap::identity(2);
  zero.beta = EndoMap::identity(2);
  zero.table.assign(2, std::vector<LValue>(2, LValue(1, 2)));
  CHECK(check_associative(zero).ok());

  AssocConformal bad = make_cur_gl11();
  bad.table[0][0].c[1] += d(); // E11 * E11 picks up a spurious d*E22 term
  CheckReport rep = check_associative(bad);
  CHECK(!rep.ok());
  bool assoc_broken = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "associativity") assoc_broken = true;
  CHECK(assoc_broken);
}

TEST_CASE("subalgebra and ideal predicates on the shipped examples")
{
  Algebra A25 = make_ex25();
  Element e1 = A25.unit(0);
  CHECK(is_subalgebra(A25, {e1}));
  CHECK(is_ideal(A25, {e1}));
  std::vector<Element> whole;
  for (size_t i = 0; i < A25.rank(); ++i) whole.push_back(A25.unit(i));
  CHECK(is_subalgebra(A25, whole));
  CHECK(is_ideal(A25, {}));
  // span{e2} is not alpha-stable
  CHECK(!is_subalgebra(A25, {A25.unit(1)}));

  Algebra A24 = make_virasoro_ns();
  Element L = A24.unit(0), E = A24.unit(1);
  CHECK(is_subalgebra(A24, {E}));
  CHECK(is_subalgebra(A24, {L}));
  CHECK(is_ideal(A24, {E}));
  CHECK(!is_ideal(A24, {L})); // [E_x L] lands outside span{L}
}

TEST_CASE("checking is safe to run concurrently")
{
  Algebra A = make_ex25();
  CheckReport ref = check_algebra(A);
  std::vector<std::thread> threads;
  std::vector<bool> oks(4, false);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { oks[static_cast<size_t>(t)] = check_algebra(A).ok(); });
  for (auto& th : threads) th.join();
  for (bool ok : oks) CHECK(ok == ref.ok());
}
