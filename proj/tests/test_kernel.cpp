#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/linalg.hpp"
#include "bhc/poly.hpp"
#include "bhc/polymod.hpp"
#include "test_util.hpp"

#include <functional>

using namespace bhc;
using namespace bhc::testutil;

static Poly d() { return poly_d(); }
static Poly x(int i = 1) { return poly_slot(i); }

TEST_CASE("polynomial arithmetic matches hand expansions")
{
  // (d+x)(d+2x) = d^2 + 3dx + 2x^2
  Poly p = (d() + x()) * (d() + Poly(2) * x());
  Poly expect = d() * d() + Poly(3) * d() * x() + Poly(2) * x() * x();
  CHECK(p == expect);

  Rng rng(7);
  Poly q = random_poly(rng, {sym_d, sym_slot(1)}, 3, 5);
  CHECK((q - q).is_zero());

  Poly half_d = Poly(scalar(1, 2)) * d();
  Poly three_half_d = Poly(scalar(3, 2)) * d();
  CHECK(half_d + three_half_d == Poly(2) * d());
}

TEST_CASE("ring axioms on random polynomials")
{
  Rng rng(12345);
  std::vector<SymId> syms{sym_d, sym_slot(1), sym_slot(2)};
  for (int iter = 0; iter < 200; ++iter) {
    Poly a = random_poly(rng, syms, 3, 4);
    Poly b = random_poly(rng, syms, 3, 4);
    Poly c = random_poly(rng, syms, 3, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("substitution: skew transform")
{
  Poly skew = -x() - d();
  CHECK(x().substitute(sym_slot(1), skew) == skew);

  Poly p = Poly(scalar(1, 2)) * d() + Poly(scalar(3, 2)) * x();
  Poly expect = -d() - Poly(scalar(3, 2)) * x();
  CHECK(p.substitute(sym_slot(1), skew) == expect);

  Rng rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    Poly q = random_poly(rng, {sym_d, sym_slot(1), sym_slot(2)}, 4, 5);
    // involution
    CHECK(q.substitute(sym_slot(1), skew).substitute(sym_slot(1), skew) == q);
    // ring homomorphism
    Poly r = random_poly(rng, {sym_d, sym_slot(1)}, 3, 4);
    CHECK((q * r).substitute(sym_slot(1), skew) ==
          q.substitute(sym_slot(1), skew) * r.substitute(sym_slot(1), skew));
    CHECK((q + r).substitute(sym_slot(1), skew) ==
          q.substitute(sym_slot(1), skew) + r.substitute(sym_slot(1), skew));
  }
}

TEST_CASE("shift of d by lambda slots")
{
  Poly by = d() + x(1);
  CHECK((d() + Poly(2) * x(2)).substitute(sym_d, by) == d() + x(1) + Poly(2) * x(2));
  CHECK(Poly(3).substitute(sym_d, by) == Poly(3));
}

TEST_CASE("coefficient extraction and rendering")
{
  Poly p = (d() + Poly(2) * x()) * (d() + Poly(2) * x());
  CHECK(p.coeff_of(sym_slot(1), 1) == Poly(4) * d());
  CHECK(p.coeff_of(sym_slot(1), 2) == Poly(4));
  CHECK(p.str(true) == "d^2 + 4*d*x + 4*x^2");
  CHECK((Poly(scalar(2, 4)) * d()).str() == "1/2*d");
  CHECK(Poly().str() == "0");
  CHECK((-d() - x()).str(true) == "-d - x");
}

TEST_CASE("simultaneous substitution swaps slots")
{
  Poly p = x(1) * x(1) + Poly(2) * x(2) + d() * x(1);
  std::map<SymId, Poly> swap{{sym_slot(1), x(2)}, {sym_slot(2), x(1)}};
  Poly q = p.substitute_many(swap);
  CHECK(q == x(2) * x(2) + Poly(2) * x(1) + d() * x(2));
  CHECK(q.substitute_many(swap) == p);
}

TEST_CASE("univariate division in d")
{
  Poly a = d().pow(3) + Poly(2) * d() + Poly(5);
  Poly b = d() + Poly(1);
  auto [q, r] = divmod_in_d(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree_in(sym_d) < 1);
}

TEST_CASE("rref_kernel on pinned examples")
{
  MatrixQ m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 2; m.at(1, 1) = 4;
  auto k = rref_kernel(m);
  CHECK(k.rank == 1);
  REQUIRE(k.basis.size() == 1);
  CHECK(k.basis[0][0] == Scalar(-2));
  CHECK(k.basis[0][1] == Scalar(1));

  MatrixQ id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
  auto k3 = rref_kernel(id3);
  CHECK(k3.rank == 3);
  CHECK(k3.basis.empty());

  MatrixQ z(2, 2);
  auto kz = rref_kernel(z);
  CHECK(kz.rank == 0);
  CHECK(kz.basis.size() == 2);
}

TEST_CASE("rref_kernel and solve_affine agree with the minor-expansion oracle")
{
  Rng rng(2024);
  std::uniform_int_distribution<size_t> dim(1, 5);
  for (int iter = 0; iter < 60; ++iter) {
    size_t rows = dim(rng), cols = dim(rng);
    MatrixQ m = random_matrix(rng, rows, cols, iter % 3 == 0);
    auto k = rref_kernel(m);
    CHECK(k.rank == rank_by_minors(m));
    CHECK(k.rank + k.basis.size() == cols);
    for (const auto& v : k.basis) {
      for (size_t i = 0; i < rows; ++i) {
        Scalar acc(0);
        for (size_t j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(is_zero(acc));
      }
    }
    // consistency of solve_affine against a known solution
    VectorQ xs(cols);
    for (auto& s : xs) s = random_rational(rng);
    VectorQ rhs(rows, Scalar(0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) rhs[i] += m.at(i, j) * xs[j];
    auto sol = solve_affine(m, rhs);
    REQUIRE(sol.has_value());
    for (size_t i = 0; i < rows; ++i) {
      Scalar acc(0);
      for (size_t j = 0; j < cols; ++j) acc += m.at(i, j) * sol->particular[j];
      CHECK(acc == rhs[i]);
    }
    CHECK(sol->kernel.size() == k.basis.size());
  }
}

TEST_CASE("solve_affine on pinned examples")
{
  MatrixQ m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = -1;
  auto sol = solve_affine(m, {Scalar(1), Scalar(0)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular[0] == scalar(1, 2));
  CHECK(sol->particular[1] == scalar(1, 2));
  CHECK(sol->kernel.empty());

  MatrixQ z(1, 1);
  CHECK(!solve_affine(z, {Scalar(1)}).has_value());
  auto sol0 = solve_affine(z, {Scalar(0)});
  REQUIRE(sol0.has_value());
  CHECK(is_zero(sol0->particular[0]));
  CHECK(sol0->kernel.size() == 1);
}

TEST_CASE("determinant and inverse over Q[d]")
{
  MatrixP m{{d() + Poly(1), Poly(2)}, {Poly(0), Poly(3)}};
  CHECK(det_in_d(m) == Poly(3) * d() + Poly(3));
  CHECK(!inverse_in_d(m).has_value());

  MatrixP u{{Poly(0), Poly(1)}, {Poly(-1), d()}};
  CHECK(det_in_d(u) == Poly(1));
  auto inv = inverse_in_d(u);
  REQUIRE(inv.has_value());
  CHECK(mul(u, *inv) == identity_p(2));

  Rng rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    // random unimodular: product of elementary matrices
    MatrixP a = identity_p(3);
    for (int step = 0; step < 4; ++step) {
      MatrixP e = identity_p(3);
      std::uniform_int_distribution<size_t> idx(0, 2);
      size_t i = idx(rng), j = idx(rng);
      if (i != j) e[i][j] = random_poly(rng, {sym_d}, 2, 2);
      a = mul(a, e);
    }
    Poly det = det_in_d(a);
    CHECK(det == Poly(1));
    auto ai = inverse_in_d(a);
    REQUIRE(ai.has_value());
    CHECK(mul(a, *ai) == identity_p(3));
  }
}

TEST_CASE("hnf membership on pinned examples")
{
  // v = d*e1, gens = {e1} -> member
  std::vector<PolyModVector> gens{{Poly(1)}};
  CHECK(hnf_membership(gens, {d()}));
  // v = e1, gens = {d*e1} -> not a member (1 is not divisible by d)
  std::vector<PolyModVector> gens2{{d()}};
  CHECK(!hnf_membership(gens2, {Poly(1)}));
  // v = 0 is always a member
  CHECK(hnf_membership(gens2, {Poly()}));
  CHECK(hnf_membership({}, {Poly(), Poly()}));
}

TEST_CASE("hnf membership agrees with the bounded-degree cofactor oracle")
{
  Rng rng(777);
  std::uniform_int_distribution<size_t> rankd(1, 3), ngens(1, 3);
  for (int iter = 0; iter < 120; ++iter) {
    size_t rank = rankd(rng);
    std::vector<PolyModVector> gens;
    size_t g = ngens(rng);
    for (size_t t = 0; t < g; ++t) {
      PolyModVector v(rank);
      for (auto& p : v) p = random_poly(rng, {sym_d}, 2, 3);
      gens.push_back(v);
    }
    PolyModVector v(rank);
    if (iter % 2 == 0) {
      // random combination of the generators: must be a member
      for (const auto& gen : gens) {
        Poly q = random_poly(rng, {sym_d}, 2, 2);
        for (size_t i = 0; i < rank; ++i) v[i] += q * gen[i];
      }
    } else {
      for (auto& p : v) p = random_poly(rng, {sym_d}, 2, 3);
    }
    bool fast = hnf_membership(gens, v);
    bool slow = membership_by_cofactors(gens, v, 8);
    CHECK(fast == slow);
  }
}
