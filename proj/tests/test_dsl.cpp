#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/builtins.hpp"
#include "bhc/constructions.hpp"
#include "bhc/dsl.hpp"
#include "families.hpp"

#include <fstream>
#include <sstream>

using namespace bhc;
using namespace bhc::testutil;

namespace {

std::string slurp(const std::string& path)
{
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_file(const std::string& name) { return std::string(BHC_DATA_DIR) + "/" + name; }

bool same_algebra(const Algebra& a, const Algebra& b)
{
  return a.names == b.names && a.parity == b.parity && a.alpha == b.alpha &&
         a.beta == b.beta && a.table == b.table;
}

} // namespace

TEST_CASE("the shipped files parse to the builtin tables")
{
  SourceDocument doc = parse_document(slurp(data_file("virasoro_ns.alg")));
  REQUIRE(doc.algebras.size() == 1);
  CHECK(doc.algebras[0].first == "virasoro_ns");
  CHECK(same_algebra(doc.algebras[0].second, make_virasoro_ns()));

  SourceDocument d25 = parse_document(slurp(data_file("ex25.alg")));
  REQUIRE(d25.algebras.size() == 1);
  CHECK(same_algebra(d25.algebras[0].second, make_ex25()));
  // the table entry spelled in the file
  const Algebra& A = d25.algebras[0].second;
  CHECK(A.table[1][2].c[0] == Poly(1));

  SourceDocument dc = parse_document(slurp(data_file("cur_gl11.alg")));
  REQUIRE(dc.assoc_algebras.size() == 1);
  CHECK(dc.assoc_algebras[0].second.table == make_cur_gl11().table);
}

TEST_CASE("round trips on the shipped files are byte-stable")
{
  for (const char* name : {"virasoro_ns.alg", "virasoro_f_eq_d.alg", "ex25.alg",
                           "cur_gl11.alg", "ex25_tools.alg"}) {
    std::string text = slurp(data_file(name));
    std::string once = serialize_document(parse_document(text));
    CHECK(once == text);
    CHECK(serialize_document(parse_document(once)) == once);
  }
}

TEST_CASE("serialization canonicalizes non-canonical input in one pass")
{
  // omitted maps default to the identity, coefficients reduce, entries
  // reorder; a second pass is then a fixed point
  std::string text = "algebra t {\n"
                     "  generators: a: even, b: odd;\n"
                     "  bracket [b, a] = 2/4*d*b;\n"
                     "  bracket [a, b] = (x + d)*b;\n"
                     "}\n";
  SourceDocument doc = parse_document(text);
  std::string canon = serialize_document(doc);
  CHECK(canon.find("alpha: a -> a, b -> b;") != std::string::npos);
  CHECK(canon.find("bracket [a, b] = (d + x)*b;") != std::string::npos);
  CHECK(canon.find("bracket [b, a] = 1/2*d*b;") != std::string::npos);
  CHECK(serialize_document(parse_document(canon)) == canon);
}

TEST_CASE("built algebras survive a serialize/parse trip")
{
  Algebra C = cur(gl11_lie());
  SourceDocument doc;
  doc.algebras.emplace_back("cur_gl11_lie", C);
  SourceDocument back = parse_document(serialize_document(doc));
  REQUIRE(back.algebras.size() == 1);
  CHECK(same_algebra(back.algebras[0].second, C));

  Algebra T = tensor_superalgebra(virasoro_rank1(), [] {
    auto B = SuperAlgebraFD::zero({"u", "eps"}, {Parity::even, Parity::even});
    set_bracket(B, 0, 0, 0, Scalar(1));
    set_bracket(B, 0, 1, 1, Scalar(1));
    set_bracket(B, 1, 0, 1, Scalar(1));
    return B;
  }());
  SourceDocument doc2;
  doc2.algebras.emplace_back("vir_eps", T);
  SourceDocument back2 = parse_document(serialize_document(doc2));
  CHECK(same_algebra(back2.algebras[0].second, T));
}

TEST_CASE("modules, maps and operators round-trip")
{
  std::string text = slurp(data_file("ex25_tools.alg"));
  SourceDocument doc = parse_document(text);
  REQUIRE(doc.modules.size() == 1);
  REQUIRE(doc.maps.size() == 2);
  REQUIRE(doc.ooperators.size() == 1);
  CHECK(doc.modules[0].algebra == "ex25");
  CHECK(doc.modules[0].module.rho[1][2].c[0] == Poly(1));
  CHECK(doc.maps[1].map.entries[0][0] == poly_slot(1));
  CHECK(doc.ooperators[0].op.t[1][1] == Poly(2));
}

TEST_CASE("parse errors carry positions")
{
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_document(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("algebra t {\n  generators: ;\n}\n", "empty generators");
  expect_error("algebra t {\n  generators: a: even;\n  bracket [a, zz] = a;\n}\n",
               "unknown generator");
  expect_error("algebra t {\n  generators: a: even, b: odd;\n  bracket [a, a] = b;\n}\n",
               "parity mismatch");
  expect_error("algebra t {\n  generators: a: even;\n}\nalgebra t {\n  generators: a: even;\n}\n",
               "duplicate name");
  expect_error("algebra d {\n  generators: a: even;\n}\n", "reserved");
  expect_error("algebra t {\n  generators: x2: even;\n}\n", "reserved");
  expect_error("algebra t {\n  generators: a: even;\n  alpha: a -> x*a;\n}\n",
               "not allowed here");
  expect_error("module m of nowhere {\n  generators: u: even;\n}\n", "unknown algebra");

  try {
    parse_document("algebra t {\n  generators: a: maybe;\n}\n");
    FAIL_CHECK("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parsed documents feed the checkers")
{
  SourceDocument doc = parse_document(slurp(data_file("virasoro_f_eq_d.alg")));
  CheckReport rep = check_algebra(doc.algebras[0].second);
  CHECK(!rep.ok());
  bool skew_found = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "skew-symmetry" && v.where == std::vector<std::string>{"L", "L"}) {
      skew_found = true;
      Poly expect = (poly_d() + Poly(2) * poly_slot(1)) * (poly_d() + Poly(2) * poly_slot(1));
      CHECK(v.residual.c[0] == expect);
    }
  CHECK(skew_found);
}
