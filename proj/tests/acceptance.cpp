// Acceptance suite: runs every contract criterion end to end and prints
// one PASS/FAIL line per criterion.  Exits nonzero if any criterion
// fails.  All comparisons are exact; there are no numeric tolerances
// anywhere.

#include "bhc/builtins.hpp"
#include "bhc/cochain.hpp"
#include "bhc/constructions.hpp"
#include "bhc/derivations.hpp"
#include "bhc/dsl.hpp"
#include "bhc/ooperator.hpp"
#include "families.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bhc;
using namespace bhc::testutil;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what)
{
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what
            << std::endl;
  if (!ok) ++failures;
}

std::string data_file(const std::string& name) { return std::string(BHC_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path)
{
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args)
{
  std::string cmd = std::string(BHC_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

Poly d() { return poly_d(); }
Poly x(int i = 1) { return poly_slot(i); }

// ---------------------------------------------------------------- 1
void criterion_1()
{
  bool ok = check_algebra(make_virasoro_ns()).ok();

  CheckReport rep = check_algebra(make_virasoro_ns(d(), Poly(1)));
  bool skew_exact = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "skew-symmetry" && v.where == std::vector<std::string>{"L", "L"}) {
      Poly expect = (d() + Poly(2) * x()) * (d() + Poly(2) * x());
      skew_exact = v.residual.c[0] == expect && v.residual.c[1].is_zero();
    }
  ok = ok && !rep.ok() && skew_exact;
  ok = ok && run_cli("check --input " + data_file("virasoro_ns.alg")) == 0;
  ok = ok && run_cli("check --input " + data_file("virasoro_f_eq_d.alg")) == 1;
  report(1, ok, "rank-2 example passes; the d-twist fails skew-symmetry at (L,L) with "
                "residual (d+2x)^2 L");
}

// ---------------------------------------------------------------- 2
void criterion_2()
{
  Algebra A25 = make_ex25();
  bool ok = check_algebra(A25).ok();
  ok = ok && is_ideal(A25, {A25.unit(0)});
  Algebra A24 = make_virasoro_ns();
  ok = ok && is_subalgebra(A24, {A24.unit(1)}); // span{E}
  ok = ok && is_subalgebra(A24, {A24.unit(0)}); // span{L}
  ok = ok && is_ideal(A24, {A24.unit(1)});
  ok = ok && run_cli("check --input " + data_file("ex25.alg")) == 0;
  report(2, ok, "rank-3 example passes; span{e1} is an ideal; rank-2 span checks agree");
}

// ---------------------------------------------------------------- 3
void criterion_3()
{
  Rng rng(20240);
  bool ok = true;
  auto guard = [&ok](const char* builder, const Algebra& out) {
    if (!check_algebra(out).ok()) {
      std::cout << "       closure failure in " << builder << "\n";
      ok = false;
    }
  };
  for (int iter = 0; iter < 20; ++iter) {
    guard("cur", cur(random_bihom_superalgebra(rng)));

    Algebra R = iter % 2 ? make_virasoro_ns() : cur(random_plain_superalgebra(rng));
    guard("tensor", tensor_superalgebra(R, random_commutative_superalgebra(rng)));

    {
      const auto& names = catalog_names();
      std::string which = names[rng() % names.size()];
      Algebra base = cur(catalog_algebra(which));
      EndoMap f = lift_scalar(catalog_automorphism(which, rng));
      EndoMap g = lift_scalar(catalog_automorphism(which, rng));
      guard("yau_twist", yau_twist(base, f, g));
    }

    {
      Algebra A = iter % 2 ? make_ex25() : cur(random_bihom_superalgebra(rng));
      guard("composition_twist", power_twist(A, static_cast<int>(iter) % 3));
    }

    guard("direct_sum", direct_sum(cur(random_bihom_superalgebra(rng)),
                                   cur(random_bihom_superalgebra(rng))));

    guard("from_associative", from_associative(cur_assoc(random_associative_superalgebra(rng))));

    {
      Algebra A = random_regular_algebra(rng);
      RepModule M;
      if (iter % 2) {
        M = adjoint_module(A);
      } else {
        MatrixP phi(1, std::vector<Poly>(1)), psi(1, std::vector<Poly>(1));
        phi[0][0] = Poly(nonzero_rational(rng));
        psi[0][0] = Poly(nonzero_rational(rng));
        M = trivial_module(A, {"t"}, {Parity::even}, EndoMap(phi), EndoMap(psi));
      }
      guard("semidirect", semidirect(A, M));
    }
  }
  report(3, ok, "20 randomized valid inputs per builder all close under the axioms");
}

// ---------------------------------------------------------------- 4
void criterion_4()
{
  Algebra A25 = make_ex25(), A24 = make_virasoro_ns();
  bool ok = check_module(A25, adjoint_module(A25)).ok();
  ok = ok && check_module(A24, adjoint_module(A24)).ok();
  ok = ok && check_module(A25, trivial_module(A25, {"t"}, {Parity::even},
                                              EndoMap::identity(1), EndoMap::identity(1)))
                 .ok();
  Algebra C = cur(gl11_lie());
  ok = ok && check_module(C, current_module(gl11_natural_rep())).ok();
  report(4, ok, "adjoint, trivial and current modules satisfy the module axioms");
}

// ---------------------------------------------------------------- 5
void criterion_5()
{
  Algebra A = make_ex25();
  RepModule M = adjoint_module(A);
  DiffConvention literal{};
  bool lit_ok = true;

  // (a) all 0-cochains: generic coefficients up to degree 3 in d, both
  // parities (linearity extends the check to arbitrary degree termwise)
  for (Parity theta : {Parity::even, Parity::odd}) {
    ParamPool pool;
    Cochain g = zero_cochain(A, M, 0, theta);
    for (size_t u = 0; u < M.rank(); ++u) {
      if (M.parity[u] != theta) continue;
      for (int k = 0; k <= 3; ++k) g.table[0].c[u] += Poly::var(pool.fresh()) * d().pow(k);
    }
    if (!check_d_squared(A, M, g, literal).ok()) lit_ok = false;
  }
  // (b) generic symbolic 1-cochain ansatz of degree <= 2
  for (Parity theta : {Parity::even, Parity::odd}) {
    auto basis = solve_cochain_space(A, M, 1, theta, 2);
    if (basis.empty()) continue;
    ParamPool pool;
    Cochain g = cochain_span_generic(basis, pool);
    if (!check_d_squared(A, M, g, literal).ok()) lit_ok = false;
  }

  bool ok = lit_ok;
  std::string note = "d(d gamma) = 0 exactly for all 0-cochains and the generic degree-2 "
                     "1-cochain ansatz (literal transcription)";
  if (!lit_ok) {
    ConventionSearch sr = resolve_convention(A, M, 2);
    ok = sr.found;
    note = "literal transcription fails; sign-variant search selected '" +
           convention_name(sr.convention) + "'";
  }
  ok = ok && run_cli("d2check --n 1 --deg 2 --input " + data_file("ex25.alg")) == 0;
  ok = ok && run_cli("d2check --n 0 --deg 3 --input " + data_file("ex25.alg")) == 0;
  report(5, ok, note);
}

// ---------------------------------------------------------------- 6
void criterion_6()
{
  bool ok = true;

  // inner derivations on both shipped examples
  Algebra A24 = make_virasoro_ns();
  for (size_t gen : {0u, 1u})
    for (int k : {0, 1})
      for (int l : {0, 1}) {
        ConfMap f = inner_derivation(A24, A24.unit(gen), k, l);
        if (!is_derivation(A24, f, k + 1, l).ok()) ok = false;
      }
  Algebra A25 = make_ex25();
  {
    Element a = A25.unit(0);
    a *= d() * d() + Poly(1); // p(d) e1 stays fixed
    for (int k : {0, 1})
      for (int l : {0, 1})
        if (!is_derivation(A25, inner_derivation(A25, a, k, l), k + 1, l).ok()) ok = false;
  }

  // Lemma-closure on the rank-3 example at degree 2, exponents summed;
  // generic members make this a statement about all pairs at once
  std::vector<std::pair<int, int>> exps{{0, 0}, {1, 0}, {0, 1}};
  for (auto [k, l] : exps)
    for (auto [s, t] : exps)
      for (Parity tf : {Parity::even, Parity::odd})
        for (Parity tg : {Parity::even, Parity::odd}) {
          auto fb = solve_derivations(A25, k, l, tf, 2);
          auto gb = solve_derivations(A25, s, t, tg, 2);
          if (fb.empty() || gb.empty()) continue;
          ParamPool pool;
          ConfMap f = confmap_span_generic(fb, pool);
          ConfMap g = confmap_span_generic(gb, pool);
          for (const auto& coeff : lambda_coefficients(gc_bracket(f, g)))
            if (!is_derivation(A25, coeff, k + s, l + t).ok()) ok = false;
        }
  report(6, ok, "inner maps are derivations with bumped exponents; commutators close with "
                "summed exponents at degree 2");
}

// ---------------------------------------------------------------- 7
void criterion_7()
{
  Algebra A = make_ex25();
  bool ok = true;

  // (a) quasicentroid pairs: the bracket coefficients admit witnesses
  // with vanishing second companion
  size_t qc_pairs = 0;
  for (Parity tf : {Parity::even, Parity::odd})
    for (Parity tg : {Parity::even, Parity::odd}) {
      auto fb = solve_quasicentroids(A, 0, 0, tf, 2);
      auto gb = solve_quasicentroids(A, 0, 0, tg, 2);
      for (const auto& f : fb)
        for (const auto& g : gb) {
          ++qc_pairs;
          for (const auto& coeff : lambda_coefficients(gc_bracket(f, g))) {
            int deg = 0;
            for (const auto& row : coeff.entries)
              for (const auto& p : row) deg = std::max(deg, p.total_degree());
            auto w = witness_generalized(A, coeff, 0, 0, deg, true);
            if (!w || !w->fsecond.is_zero()) ok = false;
          }
        }
    }
  if (qc_pairs == 0) ok = false;

  // (b) quasiderivation + quasicentroid of equal parity
  size_t mixed_pairs = 0;
  for (Parity theta : {Parity::even, Parity::odd}) {
    auto qds = solve_quasiderivations(A, 0, 0, theta, 2);
    auto qcs = solve_quasicentroids(A, 0, 0, theta, 2);
    for (const auto& [f, fprime] : qds)
      for (const auto& g : qcs) {
        ++mixed_pairs;
        ConfMap sum = f + g;
        int deg = 0;
        for (const auto& mmap : {sum, fprime})
          for (const auto& row : mmap.entries)
            for (const auto& p : row) deg = std::max(deg, p.total_degree());
        if (!witness_generalized(A, sum, 0, 0, std::max(deg, 2)).has_value()) ok = false;
      }
  }
  if (mixed_pairs == 0) ok = false;

  // (c) central derivations bracket back into central derivations.  On
  // the rank-3 example the solved space is zero (the identities force
  // every entry to vanish), so the zero map and a rank-1 instance with a
  // genuinely nonzero space carry the content.
  size_t central_pairs = 0;
  for (const Algebra& B : {make_ex25(), rank1_abelian()}) {
    for (Parity tf : {Parity::even, Parity::odd})
      for (Parity tg : {Parity::even, Parity::odd}) {
        auto zs = solve_central_derivations(B, 0, 0, tf, 2);
        zs.push_back(ConfMap::zero(B.rank(), tf));
        auto ds = solve_derivations(B, 0, 0, tg, 2);
        for (const auto& f : zs)
          for (const auto& g : ds) {
            ++central_pairs;
            for (const auto& coeff : lambda_coefficients(gc_bracket(f, g)))
              if (!classify_map(B, coeff, 0, 0).central_derivation) ok = false;
          }
      }
  }
  if (central_pairs == 0) ok = false;

  report(7, ok, "witness searches realize the three generalized-derivation propositions at "
                "degree 2");
}

// ---------------------------------------------------------------- 8
void criterion_8()
{
  bool ok = true;
  for (const Algebra& A : {make_ex25(), make_virasoro_ns()}) {
    RepModule M = adjoint_module(A);
    if (!check_o_operator(A, M, OOperator::zero(A.rank(), M.rank())).ok()) ok = false;
  }

  // the identity on the rank-2 adjoint fails with the bracket as residual
  {
    Algebra A = make_virasoro_ns();
    RepModule M = adjoint_module(A);
    OOperator T = OOperator::zero(2, 2);
    T.t[0][0] = Poly(1);
    T.t[1][1] = Poly(1);
    CheckReport rep = check_o_operator(A, M, T);
    if (rep.ok()) ok = false;
    size_t bracket_residuals = 0;
    for (const auto& v : rep.violations) {
      if (v.axiom != "rota-baxter") continue;
      int i = A.index_of(v.where[0]), j = A.index_of(v.where[1]);
      LValue expect = -A.table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v.residual == expect.normalized_slots()) ++bracket_residuals;
    }
    if (bracket_residuals != 3) ok = false; // the three nonzero pairs
  }

  // every passing operator induces a verified bracket that T intertwines
  {
    Algebra A = make_ex25();
    RepModule M = adjoint_module(A);
    std::vector<OOperator> passing;
    passing.push_back(OOperator::zero(3, 3));
    std::vector<Scalar> vals{Scalar(0), Scalar(1), Scalar(2), Scalar(-1), scalar(1, 2)};
    for (const Scalar& p : vals)
      for (const Scalar& r : vals)
        for (const Scalar& s : vals) {
          OOperator T = OOperator::zero(3, 3);
          T.t[0][0] = Poly(p);
          T.t[1][1] = Poly(r);
          T.t[2][2] = Poly(r);
          T.t[1][2] = Poly(s);
          T.t[2][1] = Poly(s);
          if (check_o_operator(A, M, T).ok()) passing.push_back(T);
        }
    if (passing.size() < 3) ok = false;
    for (const auto& T : passing) {
      Algebra B = induced_bracket(A, M, T);
      if (!check_algebra(B).ok()) ok = false;
      for (size_t u = 0; u < M.rank(); ++u)
        for (size_t v = 0; v < M.rank(); ++v) {
          LValue lhs = A.eval(T.apply(M.unit(u)), T.apply(M.unit(v)), 1);
          if (!(lhs == T.apply(B.table[u][v]))) ok = false;
        }
    }
  }
  report(8, ok, "zero operator passes; the identity fails with the bracket as residual; "
                "passing operators induce verified brackets");
}

// ---------------------------------------------------------------- 9
void criterion_9()
{
  bool ok = true;
  std::vector<const char*> files{"virasoro_ns.alg", "virasoro_f_eq_d.alg", "ex25.alg",
                                 "cur_gl11.alg", "ex25_tools.alg"};
  for (const char* name : files) {
    SourceDocument doc = parse_document(slurp(data_file(name)));
    // the n-th products of the lambda-bracket reassemble it: the
    // operation itself for algebras, the same extraction for products
    for (const auto& [aname, A] : doc.algebras) {
      for (size_t i = 0; i < A.rank(); ++i)
        for (size_t j = 0; j < A.rank(); ++j) {
          LValue sum(1, A.rank());
          Scalar fact(1);
          for (int n = 0; n <= A.max_table_degree() + 1; ++n) {
            if (n > 0) fact *= n;
            Element prod = nth_product(A, A.unit(i), A.unit(j), n);
            LValue term = LValue::from_element(prod, 1);
            term *= Poly(1 / fact) * x().pow(n);
            sum += term;
          }
          if (!(sum == A.table[i][j])) ok = false;
          if (!nth_product(A, A.unit(i), A.unit(j), -1).is_zero()) ok = false;
        }
    }
    for (const auto& [aname, A] : doc.assoc_algebras) {
      for (size_t i = 0; i < A.rank(); ++i)
        for (size_t j = 0; j < A.rank(); ++j) {
          LValue full = A.eval(A.unit(i), A.unit(j), 1);
          LValue sum(1, A.rank());
          Scalar fact(1);
          for (int n = 0; n <= A.max_table_degree() + 1; ++n) {
            if (n > 0) fact *= n;
            Element prod = full.coeff_of_slot(1, n).to_element();
            prod *= Poly(fact);
            LValue term = LValue::from_element(prod, 1);
            term *= Poly(1 / fact) * x().pow(n);
            sum += term;
          }
          if (!(sum == A.table[i][j])) ok = false;
        }
    }
  }
  report(9, ok, "the n-th products reassemble every shipped bracket table exactly");
}

// ---------------------------------------------------------------- 10
void criterion_10()
{
  bool ok = true;
  for (const char* name : {"virasoro_ns.alg", "virasoro_f_eq_d.alg", "ex25.alg",
                           "cur_gl11.alg", "ex25_tools.alg"}) {
    std::string text = slurp(data_file(name));
    if (serialize_document(parse_document(text)) != text) ok = false;
  }
  ok = ok && run_cli("check --input " + data_file("ex25.alg")) == 0;
  ok = ok && run_cli("check --input " + data_file("virasoro_f_eq_d.alg")) == 1;
  {
    std::string mal = std::string(P_tmpdir) + "/bhc_malformed.alg";
    std::ofstream out(mal);
    out << "algebra broken {\n  generators: ;\n}\n";
    out.close();
    ok = ok && run_cli("check --input " + mal) == 2;
  }
  ok = ok && run_cli("no-such-verb") == 2;
  report(10, ok, "round trips are byte-stable and the exit codes partition 0/1/2");
}

} // namespace

int main()
{
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
  return 1;
}
