// Command-line driver: load definitions from a .alg file (or a builtin),
// run the requested checker / builder / solver, and emit a deterministic
// report.  Exit codes: 0 all verdicts ok, 1 a mathematical violation,
// 2 usage or input errors.

#include "bhc/builtins.hpp"
#include "bhc/cochain.hpp"
#include "bhc/constructions.hpp"
#include "bhc/derivations.hpp"
#include "bhc/dsl.hpp"
#include "bhc/ooperator.hpp"
#include "bhc/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bhc;

namespace {

struct Options {
  std::string input, builtin, format = "text", out;
  std::string name, algebra, module, map, ooperator, super, a, b;
  std::string parity = "both";
  int n = 1, deg = 2, k = 0, l = 0, twist = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MathFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SourceDocument load_document(const Options& opt)
{
  if (!opt.input.empty() && !opt.builtin.empty())
    throw UsageError("give either --input or --builtin, not both");
  if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) throw UsageError("cannot open '" + opt.input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
  }
  if (!opt.builtin.empty()) {
    SourceDocument doc;
    if (opt.builtin == "virasoro_ns") {
      doc.algebras.emplace_back("virasoro_ns", make_virasoro_ns());
    } else if (opt.builtin == "ex25") {
      doc.algebras.emplace_back("ex25", make_ex25());
    } else if (opt.builtin == "cur_gl11") {
      doc.assoc_algebras.emplace_back("cur_gl11", make_cur_gl11());
    } else {
      throw UsageError("unknown builtin '" + opt.builtin +
                       "' (expected virasoro_ns, ex25 or cur_gl11)");
    }
    return doc;
  }
  throw UsageError("an input is required: --input FILE or --builtin NAME");
}

std::pair<std::string, const Algebra*> pick_algebra(const SourceDocument& doc,
                                                    const Options& opt)
{
  std::string want = !opt.algebra.empty() ? opt.algebra : opt.name;
  if (!want.empty()) {
    const Algebra* A = doc.find_algebra(want);
    if (!A) throw UsageError("no algebra named '" + want + "'");
    return {want, A};
  }
  if (doc.algebras.size() != 1)
    throw UsageError("the document defines " + std::to_string(doc.algebras.size()) +
                     " algebras; pick one with --algebra");
  return {doc.algebras[0].first, &doc.algebras[0].second};
}

std::pair<std::string, const AssocConformal*> pick_assoc(const SourceDocument& doc,
                                                         const Options& opt)
{
  std::string want = !opt.algebra.empty() ? opt.algebra : opt.name;
  if (!want.empty()) {
    const AssocConformal* A = doc.find_assoc(want);
    if (!A) throw UsageError("no assocalgebra named '" + want + "'");
    return {want, A};
  }
  if (doc.assoc_algebras.size() != 1)
    throw UsageError("the document defines " + std::to_string(doc.assoc_algebras.size()) +
                     " assocalgebras; pick one with --algebra");
  return {doc.assoc_algebras[0].first, &doc.assoc_algebras[0].second};
}

// The module named by --module, or the adjoint module of the selected
// algebra when the flag is absent.
struct ModulePick {
  std::string name;
  std::string algebra_name;
  const Algebra* algebra = nullptr;
  RepModule module;
};

ModulePick pick_module(const SourceDocument& doc, const Options& opt)
{
  ModulePick out;
  if (!opt.module.empty()) {
    const SourceDocument::ModuleDef* m = doc.find_module(opt.module);
    if (!m) throw UsageError("no module named '" + opt.module + "'");
    out.name = m->name;
    out.algebra_name = m->algebra;
    out.algebra = doc.find_algebra(m->algebra);
    out.module = m->module;
    return out;
  }
  auto [aname, A] = pick_algebra(doc, opt);
  out.name = "adjoint(" + aname + ")";
  out.algebra_name = aname;
  out.algebra = A;
  out.module = adjoint_module(*A);
  return out;
}

std::vector<Parity> parse_parities(const std::string& s)
{
  if (s == "even") return {Parity::even};
  if (s == "odd") return {Parity::odd};
  if (s == "both") return {Parity::even, Parity::odd};
  throw UsageError("bad --parity '" + s + "' (expected even, odd or both)");
}

EndoMap endo_from_map(const SourceDocument& doc, const std::string& name,
                      const Algebra& A)
{
  const SourceDocument::MapDef* m = doc.find_map(name);
  if (!m) throw UsageError("no map named '" + name + "'");
  if (m->map.parity != Parity::even) throw UsageError("map '" + name + "' must be even");
  for (const auto& row : m->map.entries)
    for (const auto& p : row)
      if (!p.slots_free())
        throw UsageError("map '" + name + "' must not involve the lambda slot");
  if (m->map.rank() != A.rank()) throw UsageError("map '" + name + "' has the wrong rank");
  return EndoMap(m->map.entries);
}

std::string serialize_algebra(const std::string& name, const Algebra& A)
{
  SourceDocument doc;
  doc.algebras.emplace_back(name, A);
  return serialize_document(doc);
}

std::string render_confmap(const ConfMap& f, const std::vector<std::string>& names)
{
  std::ostringstream os;
  os << "parity: " << parity_name(f.parity) << "\n";
  for (size_t i = 0; i < f.rank(); ++i) {
    std::vector<Poly> col(f.rank());
    for (size_t j = 0; j < f.rank(); ++j) col[j] = f.entries[j][i];
    os << names[i] << " -> " << render_element(col, names, true) << "\n";
  }
  return os.str();
}

std::string render_cochain(const Cochain& g, const std::vector<std::string>& alg_names,
                           const std::vector<std::string>& mod_names)
{
  std::ostringstream os;
  os << "parity: " << parity_name(g.parity) << "\n";
  if (g.arity == 0) {
    os << "value -> " << render_element(g.table[0].c, mod_names, true) << "\n";
    return os.str();
  }
  for (size_t flat = 0; flat < g.table.size(); ++flat) {
    if (g.table[flat].is_zero()) continue;
    os << "gamma[";
    std::vector<size_t> T = g.tuple_of(flat);
    for (size_t t = 0; t < T.size(); ++t) {
      if (t) os << ", ";
      os << alg_names[T[t]];
    }
    os << "] -> " << render_element(g.table[flat].c, mod_names, g.arity <= 1) << "\n";
  }
  return os.str();
}

// Generic degree-bounded cochain of one parity: the solver space for
// n >= 1, the unconstrained element ansatz for n = 0 (a 0-cochain is just
// an element).
Cochain generic_cochain(const Algebra& A, const RepModule& M, int n, Parity theta, int deg,
                        ParamPool& pool)
{
  if (n == 0) {
    Cochain g = zero_cochain(A, M, 0, theta);
    for (size_t u = 0; u < M.rank(); ++u) {
      if (M.parity[u] != theta) continue;
      for (int k = 0; k <= deg; ++k)
        g.table[0].c[u] += Poly::var(pool.fresh()) * poly_d().pow(k);
    }
    return g;
  }
  return cochain_span_generic(solve_cochain_space(A, M, n, theta, deg), pool);
}

void cmd_check(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_algebra(doc, opt);
  rep.add_info("algebra", name);
  rep.add_verdict("algebra " + name, check_algebra(*A), A->names);
}

void cmd_check_assoc(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_assoc(doc, opt);
  rep.add_info("assocalgebra", name);
  rep.add_verdict("assocalgebra " + name, check_associative(*A), A->names);
}

void cmd_check_module(const SourceDocument& doc, const Options& opt, Report& rep)
{
  ModulePick m = pick_module(doc, opt);
  rep.add_info("module", m.name);
  rep.add_info("algebra", m.algebra_name);
  std::vector<std::string> names = m.module.names;
  for (const auto& n : m.algebra->names) names.push_back(n);
  rep.add_verdict("module " + m.name, check_module(*m.algebra, m.module), m.module.names);
}

void emit_built(Report& rep, const std::string& name, const Algebra& built)
{
  rep.add_verdict("output " + name, check_algebra(built), built.names);
  rep.add_output("result", serialize_algebra(name, built));
}

void cmd_twist(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_algebra(doc, opt);
  if (opt.a.empty() || opt.b.empty()) throw UsageError("twist needs --a MAP and --b MAP");
  EndoMap f = endo_from_map(doc, opt.a, *A);
  EndoMap g = endo_from_map(doc, opt.b, *A);
  rep.add_info("algebra", name);
  rep.add_info("a", opt.a);
  rep.add_info("b", opt.b);
  emit_built(rep, name + "_twist", yau_twist(*A, f, g));
}

void cmd_compose_twist(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_algebra(doc, opt);
  rep.add_info("algebra", name);
  rep.add_info("k", std::to_string(opt.twist));
  emit_built(rep, name + "_pow" + std::to_string(opt.twist), power_twist(*A, opt.twist));
}

void cmd_dsum(const SourceDocument& doc, const Options& opt, Report& rep)
{
  const Algebra *A = nullptr, *B = nullptr;
  std::string an, bn;
  if (!opt.a.empty() && !opt.b.empty()) {
    A = doc.find_algebra(opt.a);
    B = doc.find_algebra(opt.b);
    if (!A || !B) throw UsageError("dsum: unknown algebra name");
    an = opt.a;
    bn = opt.b;
  } else if (doc.algebras.size() == 2) {
    an = doc.algebras[0].first;
    bn = doc.algebras[1].first;
    A = &doc.algebras[0].second;
    B = &doc.algebras[1].second;
  } else {
    throw UsageError("dsum needs --a and --b (or a document with exactly two algebras)");
  }
  rep.add_info("a", an);
  rep.add_info("b", bn);
  emit_built(rep, an + "_plus_" + bn, direct_sum(*A, *B));
}

void cmd_cur(const SourceDocument& doc, const Options& opt, Report& rep)
{
  std::string want = !opt.super.empty() ? opt.super : opt.name;
  const SuperAlgebraFD* g = nullptr;
  std::string name;
  if (!want.empty()) {
    g = doc.find_superalgebra(want);
    if (!g) throw UsageError("no superalgebra named '" + want + "'");
    name = want;
  } else if (doc.superalgebras.size() == 1) {
    name = doc.superalgebras[0].first;
    g = &doc.superalgebras[0].second;
  } else {
    throw UsageError("cur needs --super NAME");
  }
  rep.add_info("superalgebra", name);
  emit_built(rep, "cur_" + name, cur(*g));
}

void cmd_tensor(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_algebra(doc, opt);
  if (opt.super.empty()) throw UsageError("tensor needs --super NAME");
  const SuperAlgebraFD* B = doc.find_superalgebra(opt.super);
  if (!B) throw UsageError("no superalgebra named '" + opt.super + "'");
  rep.add_info("algebra", name);
  rep.add_info("superalgebra", opt.super);
  emit_built(rep, name + "_x_" + opt.super, tensor_superalgebra(*A, *B));
}

void cmd_from_assoc(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_assoc(doc, opt);
  rep.add_info("assocalgebra", name);
  emit_built(rep, name + "_commutator", from_associative(*A));
}

void cmd_semidirect(const SourceDocument& doc, const Options& opt, Report& rep)
{
  if (opt.module.empty()) throw UsageError("semidirect needs --module NAME");
  ModulePick m = pick_module(doc, opt);
  rep.add_info("algebra", m.algebra_name);
  rep.add_info("module", m.name);
  emit_built(rep, m.algebra_name + "_ltimes_" + m.name, semidirect(*m.algebra, m.module));
}

void cmd_d2check(const SourceDocument& doc, const Options& opt, Report& rep)
{
  ModulePick m = pick_module(doc, opt);
  rep.add_info("algebra", m.algebra_name);
  rep.add_info("module", m.name);
  rep.add_info("n", std::to_string(opt.n));
  rep.add_info("deg", std::to_string(opt.deg));

  DiffConvention literal{};
  bool literal_ok = true;
  std::vector<Parity> parities = parse_parities(opt.parity);
  for (Parity theta : parities) {
    ParamPool pool;
    Cochain g = generic_cochain(*m.algebra, m.module, opt.n, theta, opt.deg, pool);
    if (g.alg_rank == 0 || g.is_zero()) continue;
    if (!check_d_squared(*m.algebra, m.module, g, literal).ok()) literal_ok = false;
  }

  DiffConvention chosen = literal;
  bool found = true;
  if (!literal_ok) {
    ConventionSearch sr = resolve_convention(*m.algebra, m.module, opt.deg);
    found = sr.found;
    if (sr.found) chosen = sr.convention;
  }
  rep.add_info("literal-convention", literal_ok ? "ok" : "fails");
  rep.add_info("convention", found ? convention_name(chosen) : "none found");

  for (Parity theta : parities) {
    ParamPool pool;
    Cochain g = generic_cochain(*m.algebra, m.module, opt.n, theta, opt.deg, pool);
    std::string subject = std::string("d-squared n=") + std::to_string(opt.n) + " " +
                          parity_name(theta);
    if (g.alg_rank == 0 || g.is_zero()) {
      rep.add_verdict(subject + " (zero space)", CheckReport{}, m.module.names);
      continue;
    }
    rep.add_verdict(subject, check_d_squared(*m.algebra, m.module, g, chosen),
                    m.module.names);
  }
}

void cmd_cocycles(const SourceDocument& doc, const Options& opt, Report& rep)
{
  ModulePick m = pick_module(doc, opt);
  rep.add_info("algebra", m.algebra_name);
  rep.add_info("module", m.name);
  rep.add_info("n", std::to_string(opt.n));
  rep.add_info("deg", std::to_string(opt.deg));
  for (Parity theta : parse_parities(opt.parity)) {
    auto basis = solve_cocycles(*m.algebra, m.module, opt.n, theta, opt.deg);
    rep.add_info(std::string("dim ") + parity_name(theta), std::to_string(basis.size()));
    std::ostringstream os;
    for (size_t i = 0; i < basis.size(); ++i) {
      os << "cocycle " << i + 1 << ":\n"
         << render_cochain(basis[i], m.algebra->names, m.module.names);
    }
    if (!basis.empty())
      rep.add_output(std::string("cocycles ") + parity_name(theta), os.str());
  }
}

void cmd_cohomology_report(const SourceDocument& doc, const Options& opt, Report& rep)
{
  ModulePick m = pick_module(doc, opt);
  rep.add_info("algebra", m.algebra_name);
  rep.add_info("module", m.name);
  rep.add_info("n", std::to_string(opt.n));
  rep.add_info("deg", std::to_string(opt.deg));
  for (Parity theta : parse_parities(opt.parity)) {
    CohomologyReport r =
        truncated_cohomology_report(*m.algebra, m.module, opt.n, theta, opt.deg);
    std::string p = parity_name(theta);
    rep.add_info("cocycle-dim " + p, std::to_string(r.cocycle_dim));
    rep.add_info("coboundary-dim " + p, std::to_string(r.coboundary_dim));
    rep.add_info("ambient-degree " + p, std::to_string(r.ambient_degree));
    rep.add_info("ambient-cocycle-dim " + p, std::to_string(r.ambient_cocycle_dim));
    rep.add_info("truncation-indicator " + p, std::to_string(r.indicator_dim));
  }
}

void cmd_solve_der(const SourceDocument& doc, const Options& opt, Report& rep)
{
  auto [name, A] = pick_algebra(doc, opt);
  rep.add_info("algebra", name);
  rep.add_info("k", std::to_string(opt.k));
  rep.add_info("l", std::to_string(opt.l));
  rep.add_info("deg", std::to_string(opt.deg));
  for (Parity theta : parse_parities(opt.parity)) {
    auto basis = solve_derivations(*A, opt.k, opt.l, theta, opt.deg);
    rep.add_info(std::string("dim ") + parity_name(theta), std::to_string(basis.size()));
    std::ostringstream os;
    for (size_t i = 0; i < basis.size(); ++i)
      os << "derivation " << i + 1 << ":\n" << render_confmap(basis[i], A->names);
    if (!basis.empty())
      rep.add_output(std::string("derivations ") + parity_name(theta), os.str());
  }
}

void cmd_classify(const SourceDocument& doc, const Options& opt, Report& rep)
{
  if (opt.map.empty()) throw UsageError("classify needs --map NAME");
  const SourceDocument::MapDef* m = doc.find_map(opt.map);
  if (!m) throw UsageError("no map named '" + opt.map + "'");
  const Algebra* A = doc.find_algebra(m->algebra);
  rep.add_info("map", opt.map);
  rep.add_info("algebra", m->algebra);
  rep.add_info("k", std::to_string(opt.k));
  rep.add_info("l", std::to_string(opt.l));
  ClassifyFlags flags = classify_map(*A, m->map, opt.k, opt.l);
  rep.add_info("omega", in_omega(*A, m->map) ? "true" : "false");
  rep.add_info("centroid", flags.centroid ? "true" : "false");
  rep.add_info("quasicentroid", flags.quasicentroid ? "true" : "false");
  rep.add_info("central-derivation", flags.central_derivation ? "true" : "false");
  rep.add_info("derivation", is_derivation(*A, m->map, opt.k, opt.l).ok() ? "true" : "false");
}

void cmd_gder_witness(const SourceDocument& doc, const Options& opt, Report& rep)
{
  if (opt.map.empty()) throw UsageError("gder-witness needs --map NAME");
  const SourceDocument::MapDef* m = doc.find_map(opt.map);
  if (!m) throw UsageError("no map named '" + opt.map + "'");
  const Algebra* A = doc.find_algebra(m->algebra);
  rep.add_info("map", opt.map);
  rep.add_info("k", std::to_string(opt.k));
  rep.add_info("l", std::to_string(opt.l));
  rep.add_info("deg", std::to_string(opt.deg));
  auto w = witness_generalized(*A, m->map, opt.k, opt.l, opt.deg);
  if (!w) {
    rep.add_info("witnessed", "not at degree <= " + std::to_string(opt.deg));
    return;
  }
  rep.add_info("witnessed", "true");
  rep.add_output("f-prime", render_confmap(w->fprime, A->names));
  rep.add_output("f-second", render_confmap(w->fsecond, A->names));
}

void cmd_ooperator_check(const SourceDocument& doc, const Options& opt, Report& rep)
{
  if (opt.ooperator.empty()) throw UsageError("ooperator-check needs --ooperator NAME");
  const SourceDocument::OOperatorDef* o = doc.find_ooperator(opt.ooperator);
  if (!o) throw UsageError("no ooperator named '" + opt.ooperator + "'");
  const SourceDocument::ModuleDef* m = doc.find_module(o->module);
  const Algebra* A = doc.find_algebra(m->algebra);
  rep.add_info("ooperator", opt.ooperator);
  rep.add_info("module", o->module);
  std::vector<std::string> names = A->names;
  rep.add_verdict("ooperator " + opt.ooperator, check_o_operator(*A, m->module, o->op),
                  names);
}

void cmd_induced(const SourceDocument& doc, const Options& opt, Report& rep)
{
  if (opt.ooperator.empty()) throw UsageError("induced needs --ooperator NAME");
  const SourceDocument::OOperatorDef* o = doc.find_ooperator(opt.ooperator);
  if (!o) throw UsageError("no ooperator named '" + opt.ooperator + "'");
  const SourceDocument::ModuleDef* m = doc.find_module(o->module);
  const Algebra* A = doc.find_algebra(m->algebra);
  rep.add_info("ooperator", opt.ooperator);
  rep.add_info("module", o->module);
  Algebra B = induced_bracket(*A, m->module, o->op);
  emit_built(rep, o->module + "_induced", B);
  // the operator intertwines the induced bracket with the original one
  CheckReport hom;
  for (size_t u = 0; u < m->module.rank(); ++u)
    for (size_t v = 0; v < m->module.rank(); ++v) {
      LValue lhs = A->eval(o->op.apply(m->module.unit(u)), o->op.apply(m->module.unit(v)), 1);
      LValue rhs = o->op.apply(B.table[u][v]);
      hom.add("homomorphism", {m->module.names[u], m->module.names[v]}, lhs - rhs);
    }
  rep.add_verdict("operator-homomorphism", hom, A->names);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact checkers and solvers for twisted Lie conformal superalgebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "definitions file (.alg)");
    cmd->add_option("--builtin", opt.builtin, "builtin example: virasoro_ns, ex25, cur_gl11");
    cmd->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out, "write the report to a file");
    cmd->add_option("--name", opt.name, "definition to use when several are present");
    return cmd;
  };

  std::map<std::string, void (*)(const SourceDocument&, const Options&, Report&)> handlers;

  auto* c_check = add_common(app.add_subcommand("check", "verify the algebra axioms"));
  c_check->add_option("--algebra", opt.algebra, "algebra name");
  handlers["check"] = cmd_check;

  auto* c_ca = add_common(app.add_subcommand("check-assoc", "verify the associative axioms"));
  c_ca->add_option("--algebra", opt.algebra, "assocalgebra name");
  handlers["check-assoc"] = cmd_check_assoc;

  auto* c_cm = add_common(app.add_subcommand("check-module", "verify the module axioms"));
  c_cm->add_option("--module", opt.module, "module name (default: adjoint)");
  c_cm->add_option("--algebra", opt.algebra, "algebra name (for the adjoint default)");
  handlers["check-module"] = cmd_check_module;

  auto* c_tw = add_common(app.add_subcommand("twist", "twist an untwisted algebra along two maps"));
  c_tw->add_option("--algebra", opt.algebra, "algebra name");
  c_tw->add_option("--a", opt.a, "first map name")->required();
  c_tw->add_option("--b", opt.b, "second map name")->required();
  handlers["twist"] = cmd_twist;

  auto* c_ct = add_common(app.add_subcommand("compose-twist", "compose with powers of the structure maps"));
  c_ct->add_option("--algebra", opt.algebra, "algebra name");
  c_ct->add_option("--k", opt.twist, "power of the structure maps")->required();
  handlers["compose-twist"] = cmd_compose_twist;

  auto* c_ds = add_common(app.add_subcommand("dsum", "direct sum of two algebras"));
  c_ds->add_option("--a", opt.a, "first algebra");
  c_ds->add_option("--b", opt.b, "second algebra");
  handlers["dsum"] = cmd_dsum;

  auto* c_cur = add_common(app.add_subcommand("cur", "current algebra of a finite superalgebra"));
  c_cur->add_option("--super", opt.super, "superalgebra name");
  handlers["cur"] = cmd_cur;

  auto* c_tn = add_common(app.add_subcommand("tensor", "tensor with a commutative superalgebra"));
  c_tn->add_option("--algebra", opt.algebra, "algebra name");
  c_tn->add_option("--super", opt.super, "superalgebra name")->required();
  handlers["tensor"] = cmd_tensor;

  auto* c_fa = add_common(app.add_subcommand("from-assoc", "commutator algebra of a lambda-product"));
  c_fa->add_option("--algebra", opt.algebra, "assocalgebra name");
  handlers["from-assoc"] = cmd_from_assoc;

  auto* c_sd = add_common(app.add_subcommand("semidirect", "semidirect product with a module"));
  c_sd->add_option("--module", opt.module, "module name")->required();
  handlers["semidirect"] = cmd_semidirect;

  auto* c_d2 = add_common(app.add_subcommand("d2check", "verify d(d gamma) = 0 symbolically"));
  c_d2->add_option("--n", opt.n, "cochain arity")->required();
  c_d2->add_option("--deg", opt.deg, "ansatz degree bound")->required();
  c_d2->add_option("--module", opt.module, "module name (default: adjoint)");
  c_d2->add_option("--algebra", opt.algebra, "algebra name");
  c_d2->add_option("--parity", opt.parity, "even, odd or both");
  handlers["d2check"] = cmd_d2check;

  auto* c_cy = add_common(app.add_subcommand("cocycles", "basis of the degree-bounded cocycle slice"));
  c_cy->add_option("--n", opt.n, "cochain arity")->required();
  c_cy->add_option("--deg", opt.deg, "degree bound")->required();
  c_cy->add_option("--module", opt.module, "module name (default: adjoint)");
  c_cy->add_option("--algebra", opt.algebra, "algebra name");
  c_cy->add_option("--parity", opt.parity, "even, odd or both");
  handlers["cocycles"] = cmd_cocycles;

  auto* c_cr = add_common(app.add_subcommand("cohomology-report", "degree-truncated dimension report"));
  c_cr->add_option("--n", opt.n, "cochain arity")->required();
  c_cr->add_option("--deg", opt.deg, "degree bound")->required();
  c_cr->add_option("--module", opt.module, "module name (default: adjoint)");
  c_cr->add_option("--algebra", opt.algebra, "algebra name");
  c_cr->add_option("--parity", opt.parity, "even, odd or both");
  handlers["cohomology-report"] = cmd_cohomology_report;

  auto* c_sdr = add_common(app.add_subcommand("solve-der", "basis of the twisted derivation space"));
  c_sdr->add_option("--algebra", opt.algebra, "algebra name");
  c_sdr->add_option("--k", opt.k, "alpha exponent")->required();
  c_sdr->add_option("--l", opt.l, "beta exponent")->required();
  c_sdr->add_option("--deg", opt.deg, "entry degree bound")->required();
  c_sdr->add_option("--parity", opt.parity, "even, odd or both");
  handlers["solve-der"] = cmd_solve_der;

  auto* c_cl = add_common(app.add_subcommand("classify", "centroid / quasicentroid / central flags"));
  c_cl->add_option("--map", opt.map, "map name")->required();
  c_cl->add_option("--k", opt.k, "alpha exponent")->required();
  c_cl->add_option("--l", opt.l, "beta exponent")->required();
  handlers["classify"] = cmd_classify;

  auto* c_gw = add_common(app.add_subcommand("gder-witness", "search for a generalized-derivation witness"));
  c_gw->add_option("--map", opt.map, "map name")->required();
  c_gw->add_option("--k", opt.k, "alpha exponent")->required();
  c_gw->add_option("--l", opt.l, "beta exponent")->required();
  c_gw->add_option("--deg", opt.deg, "witness degree bound")->required();
  handlers["gder-witness"] = cmd_gder_witness;

  auto* c_oc = add_common(app.add_subcommand("ooperator-check", "verify the operator identity"));
  c_oc->add_option("--ooperator", opt.ooperator, "operator name")->required();
  handlers["ooperator-check"] = cmd_ooperator_check;

  auto* c_in = add_common(app.add_subcommand("induced", "bracket induced by a verified operator"));
  c_in->add_option("--ooperator", opt.ooperator, "operator name")->required();
  handlers["induced"] = cmd_induced;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::string cmd_name = app.get_subcommands().front()->get_name();
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = cmd_name;
  int exit_code = 0;
  try {
    SourceDocument doc = load_document(opt);
    handlers.at(cmd_name)(doc, opt, rep);
    if (!rep.all_ok()) exit_code = 1;
  } catch (const HypothesisViolation& e) {
    rep.add_info("hypothesis-violation", e.identity());
    rep.add_info("detail", e.what());
    exit_code = 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << (opt.input.empty() ? "" : opt.input + ":") << e.what()
              << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  std::string body = opt.format == "json" ? rep.json(exit_code) : rep.text(exit_code, ms);
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "error: cannot write '" << opt.out << "'\n";
      return 2;
    }
    out << body;
  } else {
    std::cout << body;
  }
  return exit_code;
}
