#include "bhc/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace bhc {

const Algebra* SourceDocument::find_algebra(const std::string& name) const
{
  for (const auto& [n, a] : algebras)
    if (n == name) return &a;
  return nullptr;
}

const AssocConformal* SourceDocument::find_assoc(const std::string& name) const
{
  for (const auto& [n, a] : assoc_algebras)
    if (n == name) return &a;
  return nullptr;
}

const SuperAlgebraFD* SourceDocument::find_superalgebra(const std::string& name) const
{
  for (const auto& [n, a] : superalgebras)
    if (n == name) return &a;
  return nullptr;
}

const SourceDocument::ModuleDef* SourceDocument::find_module(const std::string& name) const
{
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const SourceDocument::MapDef* SourceDocument::find_map(const std::string& name) const
{
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

const SourceDocument::OOperatorDef* SourceDocument::find_ooperator(const std::string& name) const
{
  for (const auto& o : ooperators)
    if (o.name == name) return &o;
  return nullptr;
}

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take()
  {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw ParseError(cur_.line, cur_.col, msg);
  }

private:
  void advance()
  {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    cur_ = Token{};
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= s_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      cur_.kind = Tok::ident;
      cur_.text = s_.substr(start, pos_ - start);
      col_ += static_cast<int>(cur_.text.size());
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      cur_.kind = Tok::number;
      cur_.text = s_.substr(start, pos_ - start);
      cur_.value = std::stol(cur_.text);
      col_ += static_cast<int>(cur_.text.size());
      return;
    }
    if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
      cur_.kind = Tok::punct;
      cur_.text = "->";
      pos_ += 2;
      col_ += 2;
      return;
    }
    cur_.kind = Tok::punct;
    cur_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

const std::set<std::string>& keywords()
{
  static const std::set<std::string> kw{
      "algebra", "assocalgebra", "superalgebra", "module", "map",     "ooperator",
      "generators", "alpha",     "beta",         "phi",    "psi",     "bracket",
      "product",    "action",    "entries",      "parity", "even",    "odd",
      "of",         "on",        "d",            "x"};
  return kw;
}

bool reserved_name(const std::string& s)
{
  if (keywords().count(s)) return true;
  if (s.size() >= 2 && s[0] == 'x') {
    bool digits = true;
    for (size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) return true;
  }
  return false;
}

// Value of an expression: a polynomial, possibly attached to generators.
struct ExprVal {
  Poly scalar;                // used when gens is empty
  std::map<size_t, Poly> gens; // generator index -> coefficient
  bool has_gens = false;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SourceDocument run()
  {
    SourceDocument doc;
    while (lex_.peek().kind != Tok::end) {
      Token t = expect_ident();
      if (t.text == "algebra") parse_algebra(doc, false);
      else if (t.text == "assocalgebra") parse_algebra(doc, true);
      else if (t.text == "superalgebra") parse_superalgebra(doc);
      else if (t.text == "module") parse_module(doc);
      else if (t.text == "map") parse_map(doc);
      else if (t.text == "ooperator") parse_ooperator(doc);
      else fail_at(t, "expected a definition keyword, got '" + t.text + "'");
    }
    return doc;
  }

private:
  Lexer lex_;
  std::set<std::string> names_;

  [[noreturn]] void fail_at(const Token& t, const std::string& msg)
  {
    throw ParseError(t.line, t.col, msg);
  }

  Token expect_ident()
  {
    Token t = lex_.take();
    if (t.kind != Tok::ident) fail_at(t, "expected an identifier");
    return t;
  }

  void expect_punct(const std::string& p)
  {
    Token t = lex_.take();
    if (t.kind != Tok::punct || t.text != p) fail_at(t, "expected '" + p + "'");
  }

  bool peek_punct(const std::string& p)
  {
    return lex_.peek().kind == Tok::punct && lex_.peek().text == p;
  }

  bool peek_ident(const std::string& s)
  {
    return lex_.peek().kind == Tok::ident && lex_.peek().text == s;
  }

  std::string fresh_definition_name()
  {
    Token t = expect_ident();
    if (reserved_name(t.text)) fail_at(t, "'" + t.text + "' is reserved");
    if (names_.count(t.text)) fail_at(t, "duplicate name '" + t.text + "'");
    names_.insert(t.text);
    return t.text;
  }

  struct GenList {
    std::vector<std::string> names;
    std::vector<Parity> parity;
    int index_of(const std::string& n) const
    {
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
      return -1;
    }
  };

  GenList parse_generators()
  {
    Token kw = expect_ident();
    if (kw.text != "generators") fail_at(kw, "expected 'generators'");
    expect_punct(":");
    GenList g;
    if (peek_punct(";")) fail_at(lex_.peek(), "empty generators block");
    while (true) {
      Token n = expect_ident();
      if (reserved_name(n.text)) fail_at(n, "'" + n.text + "' is reserved");
      if (g.index_of(n.text) >= 0) fail_at(n, "duplicate generator '" + n.text + "'");
      expect_punct(":");
      Token p = expect_ident();
      if (p.text != "even" && p.text != "odd") fail_at(p, "expected 'even' or 'odd'");
      g.names.push_back(n.text);
      g.parity.push_back(p.text == "even" ? Parity::even : Parity::odd);
      if (peek_punct(",")) {
        expect_punct(",");
        continue;
      }
      break;
    }
    expect_punct(";");
    return g;
  }

  Scalar parse_rational()
  {
    Token n = lex_.take();
    if (n.kind != Tok::number) fail_at(n, "expected a number");
    long num = n.value;
    long den = 1;
    if (peek_punct("/")) {
      expect_punct("/");
      Token dtok = lex_.take();
      if (dtok.kind != Tok::number) fail_at(dtok, "expected a denominator");
      den = dtok.value;
      if (den == 0) fail_at(dtok, "zero denominator");
    }
    return scalar(num, den);
  }

  // factor := rational | d | x | xN | generator | "(" expr ")"  with ^INT
  ExprVal parse_factor(const GenList& g, int max_slot)
  {
    Token t = lex_.peek();
    ExprVal v;
    if (t.kind == Tok::number) {
      v.scalar = Poly(parse_rational());
    } else if (t.kind == Tok::ident) {
      Token id = lex_.take();
      if (id.text == "d") {
        v.scalar = poly_d();
      } else if (id.text == "x" || (id.text[0] == 'x' && reserved_name(id.text))) {
        int slot = id.text == "x" ? 1 : std::stoi(id.text.substr(1));
        if (slot < 1 || slot > max_slot)
          fail_at(id, max_slot == 0 ? "lambda slots are not allowed here"
                                    : "slot '" + id.text + "' out of range");
        v.scalar = poly_slot(slot);
      } else {
        int gi = g.index_of(id.text);
        if (gi < 0) fail_at(id, "unknown name '" + id.text + "'");
        v.has_gens = true;
        v.gens[static_cast<size_t>(gi)] = Poly(1);
      }
    } else if (t.kind == Tok::punct && t.text == "(") {
      expect_punct("(");
      v = parse_expr(g, max_slot);
      expect_punct(")");
    } else if (t.kind == Tok::punct && t.text == "-") {
      expect_punct("-");
      v = parse_factor(g, max_slot);
      negate(v);
      return v;
    } else {
      fail_at(t, "expected a factor");
    }
    while (peek_punct("^")) {
      Token caret = lex_.take();
      Token e = lex_.take();
      if (e.kind != Tok::number) fail_at(e, "expected an exponent");
      if (v.has_gens) fail_at(caret, "generators cannot be raised to powers");
      v.scalar = v.scalar.pow(static_cast<int>(e.value));
    }
    return v;
  }

  static void negate(ExprVal& v)
  {
    v.scalar = -v.scalar;
    for (auto& [i, p] : v.gens) p = -p;
  }

  ExprVal mul(const Token& where, ExprVal a, ExprVal b)
  {
    if (a.has_gens && b.has_gens) fail_at(where, "cannot multiply two generators");
    if (b.has_gens) std::swap(a, b);
    // now b is scalar
    if (a.has_gens) {
      for (auto& [i, p] : a.gens) p *= b.scalar;
      return a;
    }
    a.scalar *= b.scalar;
    return a;
  }

  ExprVal parse_term(const GenList& g, int max_slot)
  {
    ExprVal v = parse_factor(g, max_slot);
    while (peek_punct("*")) {
      Token star = lex_.take();
      ExprVal w = parse_factor(g, max_slot);
      v = mul(star, std::move(v), std::move(w));
    }
    return v;
  }

  ExprVal parse_expr(const GenList& g, int max_slot)
  {
    ExprVal v = parse_term(g, max_slot);
    while (peek_punct("+") || peek_punct("-")) {
      bool minus = lex_.peek().text == "-";
      lex_.take();
      ExprVal w = parse_term(g, max_slot);
      if (minus) negate(w);
      if (w.has_gens || v.has_gens) {
        v.has_gens = true;
        for (auto& [i, p] : w.gens) v.gens[i] += p;
        if (!w.scalar.is_zero() || !v.scalar.is_zero())
          fail_at(lex_.peek(), "cannot add a scalar to a generator term");
      } else {
        v.scalar += w.scalar;
      }
    }
    return v;
  }

  // Element over g's generators; max_slot 0 for Q[d] combinations.
  std::vector<Poly> parse_element(const GenList& g, int max_slot)
  {
    Token at = lex_.peek();
    ExprVal v = parse_expr(g, max_slot);
    std::vector<Poly> comps(g.names.size());
    if (!v.has_gens) {
      if (!v.scalar.is_zero()) fail_at(at, "expected a combination of generators (or 0)");
      return comps;
    }
    for (auto& [i, p] : v.gens) comps[i] = p;
    return comps;
  }

  void parse_map_section(const GenList& g, MatrixP& m, const char* kw, int max_slot)
  {
    expect_punct(":");
    std::vector<bool> seen(g.names.size(), false);
    while (true) {
      Token n = expect_ident();
      int gi = g.index_of(n.text);
      if (gi < 0) fail_at(n, std::string("unknown generator in ") + kw);
      if (seen[static_cast<size_t>(gi)]) fail_at(n, "duplicate entry in " + std::string(kw));
      seen[static_cast<size_t>(gi)] = true;
      expect_punct("->");
      std::vector<Poly> comps = parse_element(g, max_slot);
      for (size_t j = 0; j < comps.size(); ++j) m[j][static_cast<size_t>(gi)] = comps[j];
      if (peek_punct(",")) {
        expect_punct(",");
        continue;
      }
      break;
    }
    expect_punct(";");
  }

  // shared body for algebra / assocalgebra
  void parse_algebra(SourceDocument& doc, bool assoc)
  {
    std::string name = fresh_definition_name();
    expect_punct("{");
    GenList g = parse_generators();
    size_t n = g.names.size();
    MatrixP alpha = identity_p(n), beta = identity_p(n);
    std::vector<std::vector<LValue>> table(n, std::vector<LValue>(n, LValue(1, n)));
    const char* entry_kw = assoc ? "product" : "bracket";
    while (!peek_punct("}")) {
      Token kw = expect_ident();
      if (kw.text == "alpha") {
        parse_map_section(g, alpha, "alpha", 0);
      } else if (kw.text == "beta") {
        parse_map_section(g, beta, "beta", 0);
      } else if (kw.text == entry_kw) {
        expect_punct("[");
        Token a = expect_ident();
        int i = g.index_of(a.text);
        if (i < 0) fail_at(a, "unknown generator '" + a.text + "'");
        expect_punct(",");
        Token b = expect_ident();
        int j = g.index_of(b.text);
        if (j < 0) fail_at(b, "unknown generator '" + b.text + "'");
        expect_punct("]");
        expect_punct("=");
        std::vector<Poly> comps = parse_element(g, 1);
        Parity want = g.parity[static_cast<size_t>(i)] + g.parity[static_cast<size_t>(j)];
        for (size_t k = 0; k < n; ++k)
          if (!comps[k].is_zero() && g.parity[k] != want)
            fail_at(b, "parity mismatch in " + std::string(entry_kw) + " entry");
        table[static_cast<size_t>(i)][static_cast<size_t>(j)].c = comps;
        expect_punct(";");
      } else {
        fail_at(kw, "unexpected section '" + kw.text + "'");
      }
    }
    expect_punct("}");
    if (assoc) {
      AssocConformal A;
      A.names = g.names;
      A.parity = g.parity;
      A.alpha = EndoMap(alpha);
      A.beta = EndoMap(beta);
      A.table = std::move(table);
      doc.assoc_algebras.emplace_back(name, std::move(A));
    } else {
      Algebra A;
      A.names = g.names;
      A.parity = g.parity;
      A.alpha = EndoMap(alpha);
      A.beta = EndoMap(beta);
      A.table = std::move(table);
      doc.algebras.emplace_back(name, std::move(A));
    }
  }

  void parse_superalgebra(SourceDocument& doc)
  {
    std::string name = fresh_definition_name();
    expect_punct("{");
    GenList g = parse_generators();
    size_t n = g.names.size();
    SuperAlgebraFD s = SuperAlgebraFD::zero(g.names, g.parity);
    MatrixP alpha = identity_p(n), beta = identity_p(n);
    while (!peek_punct("}")) {
      Token kw = expect_ident();
      if (kw.text == "alpha") {
        parse_map_section(g, alpha, "alpha", 0);
      } else if (kw.text == "beta") {
        parse_map_section(g, beta, "beta", 0);
      } else if (kw.text == "bracket") {
        expect_punct("[");
        Token a = expect_ident();
        int i = g.index_of(a.text);
        if (i < 0) fail_at(a, "unknown generator '" + a.text + "'");
        expect_punct(",");
        Token b = expect_ident();
        int j = g.index_of(b.text);
        if (j < 0) fail_at(b, "unknown generator '" + b.text + "'");
        expect_punct("]");
        expect_punct("=");
        std::vector<Poly> comps = parse_element(g, 0);
        for (size_t k = 0; k < n; ++k) {
          if (!comps[k].is_constant())
            fail_at(b, "superalgebra structure constants must be scalars");
          s.c[static_cast<size_t>(i)][static_cast<size_t>(j)][k] = comps[k].constant_term();
        }
        expect_punct(";");
      } else {
        fail_at(kw, "unexpected section '" + kw.text + "'");
      }
    }
    expect_punct("}");
    // scalar maps only
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (!alpha[i][j].is_constant() || !beta[i][j].is_constant())
          throw ParseError(0, 0, "superalgebra maps must be scalar");
        s.alpha.at(i, j) = alpha[i][j].constant_term();
        s.beta.at(i, j) = beta[i][j].constant_term();
      }
    doc.superalgebras.emplace_back(name, std::move(s));
  }

  void parse_module(SourceDocument& doc)
  {
    std::string name = fresh_definition_name();
    Token of = expect_ident();
    if (of.text != "of") fail_at(of, "expected 'of'");
    Token alg = expect_ident();
    const Algebra* A = doc.find_algebra(alg.text);
    if (!A) fail_at(alg, "unknown algebra '" + alg.text + "'");
    GenList ag;
    ag.names = A->names;
    ag.parity = A->parity;

    expect_punct("{");
    GenList g = parse_generators();
    size_t nm = g.names.size(), na = A->rank();
    MatrixP phi = identity_p(nm), psi = identity_p(nm);
    std::vector<std::vector<LValue>> rho(na, std::vector<LValue>(nm, LValue(1, nm)));
    while (!peek_punct("}")) {
      Token kw = expect_ident();
      if (kw.text == "phi") {
        parse_map_section(g, phi, "phi", 0);
      } else if (kw.text == "psi") {
        parse_map_section(g, psi, "psi", 0);
      } else if (kw.text == "action") {
        expect_punct("[");
        Token a = expect_ident();
        int i = ag.index_of(a.text);
        if (i < 0) fail_at(a, "unknown algebra generator '" + a.text + "'");
        expect_punct(",");
        Token b = expect_ident();
        int u = g.index_of(b.text);
        if (u < 0) fail_at(b, "unknown module generator '" + b.text + "'");
        expect_punct("]");
        expect_punct("=");
        std::vector<Poly> comps = parse_element(g, 1);
        rho[static_cast<size_t>(i)][static_cast<size_t>(u)].c = comps;
        expect_punct(";");
      } else {
        fail_at(kw, "unexpected section '" + kw.text + "'");
      }
    }
    expect_punct("}");
    RepModule M;
    M.names = g.names;
    M.parity = g.parity;
    M.phi = EndoMap(phi);
    M.psi = EndoMap(psi);
    M.rho = std::move(rho);
    doc.modules.push_back({name, alg.text, std::move(M)});
  }

  void parse_map(SourceDocument& doc)
  {
    std::string name = fresh_definition_name();
    Token on = expect_ident();
    if (on.text != "on") fail_at(on, "expected 'on'");
    Token alg = expect_ident();
    const Algebra* A = doc.find_algebra(alg.text);
    if (!A) fail_at(alg, "unknown algebra '" + alg.text + "'");
    GenList g;
    g.names = A->names;
    g.parity = A->parity;

    expect_punct("{");
    Token pk = expect_ident();
    if (pk.text != "parity") fail_at(pk, "expected 'parity'");
    expect_punct(":");
    Token pv = expect_ident();
    if (pv.text != "even" && pv.text != "odd") fail_at(pv, "expected 'even' or 'odd'");
    Parity theta = pv.text == "even" ? Parity::even : Parity::odd;
    expect_punct(";");

    Token ek = expect_ident();
    if (ek.text != "entries") fail_at(ek, "expected 'entries'");
    MatrixP entries(A->rank(), std::vector<Poly>(A->rank()));
    parse_map_section(g, entries, "entries", 1);
    expect_punct("}");

    for (size_t j = 0; j < A->rank(); ++j)
      for (size_t i = 0; i < A->rank(); ++i)
        if (!entries[j][i].is_zero() && A->parity[j] != A->parity[i] + theta)
          throw ParseError(0, 0, "parity mismatch in declared entries of map '" + name + "'");

    ConfMap f = ConfMap::zero(A->rank(), theta);
    f.entries = std::move(entries);
    doc.maps.push_back({name, alg.text, std::move(f)});
  }

  void parse_ooperator(SourceDocument& doc)
  {
    std::string name = fresh_definition_name();
    Token on = expect_ident();
    if (on.text != "on") fail_at(on, "expected 'on'");
    Token mod = expect_ident();
    const SourceDocument::ModuleDef* M = doc.find_module(mod.text);
    if (!M) fail_at(mod, "unknown module '" + mod.text + "'");
    const Algebra* A = doc.find_algebra(M->algebra);

    GenList mg, ag;
    mg.names = M->module.names;
    mg.parity = M->module.parity;
    ag.names = A->names;
    ag.parity = A->parity;

    expect_punct("{");
    Token ek = expect_ident();
    if (ek.text != "entries") fail_at(ek, "expected 'entries'");
    expect_punct(":");
    OOperator T = OOperator::zero(A->rank(), M->module.rank());
    std::vector<bool> seen(M->module.rank(), false);
    while (true) {
      Token n = expect_ident();
      int u = mg.index_of(n.text);
      if (u < 0) fail_at(n, "unknown module generator '" + n.text + "'");
      if (seen[static_cast<size_t>(u)]) fail_at(n, "duplicate entry");
      seen[static_cast<size_t>(u)] = true;
      expect_punct("->");
      std::vector<Poly> comps = parse_element(ag, 0);
      for (size_t j = 0; j < comps.size(); ++j) T.t[j][static_cast<size_t>(u)] = comps[j];
      if (peek_punct(",")) {
        expect_punct(",");
        continue;
      }
      break;
    }
    expect_punct(";");
    expect_punct("}");
    doc.ooperators.push_back({name, mod.text, std::move(T)});
  }
};

std::string render_poly_factor(const Poly& p, bool single_slot)
{
  if (p == Poly(1)) return "";
  if (p == Poly(-1)) return "-";
  std::string s = p.str(single_slot);
  bool multi = p.terms().size() > 1;
  if (multi) return "(" + s + ")*";
  return s + "*";
}

} // namespace

std::string render_element(const std::vector<Poly>& comps,
                           const std::vector<std::string>& names, bool single_slot)
{
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_zero()) continue;
    std::string piece = render_poly_factor(comps[i], single_slot) + names[i];
    if (first) {
      os << piece;
      first = false;
    } else if (piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  if (first) return "0";
  return os.str();
}

std::string render_lvalue(const LValue& v, const std::vector<std::string>& names)
{
  return render_element(v.c, names, v.max_slot() <= 1);
}

SourceDocument parse_document(const std::string& text)
{
  Parser p(text);
  return p.run();
}

namespace {

void write_generators(std::ostringstream& os, const std::vector<std::string>& names,
                      const std::vector<Parity>& parity)
{
  os << "  generators: ";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) os << ", ";
    os << names[i] << ": " << parity_name(parity[i]);
  }
  os << ";\n";
}

void write_map_section(std::ostringstream& os, const char* kw, const MatrixP& m,
                       const std::vector<std::string>& names)
{
  os << "  " << kw << ": ";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) os << ", ";
    std::vector<Poly> col(names.size());
    for (size_t j = 0; j < names.size(); ++j) col[j] = m[j][i];
    os << names[i] << " -> " << render_element(col, names, true);
  }
  os << ";\n";
}

void write_table(std::ostringstream& os, const char* kw,
                 const std::vector<std::vector<LValue>>& table,
                 const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                 const std::vector<std::string>& out)
{
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      if (table[i][j].is_zero()) continue;
      os << "  " << kw << " [" << rows[i] << ", " << cols[j]
         << "] = " << render_element(table[i][j].c, out, true) << ";\n";
    }
}

} // namespace

std::string serialize_document(const SourceDocument& doc)
{
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "\n";
    first = false;
  };

  for (const auto& [name, A] : doc.algebras) {
    sep();
    os << "algebra " << name << " {\n";
    write_generators(os, A.names, A.parity);
    write_map_section(os, "alpha", A.alpha.m, A.names);
    write_map_section(os, "beta", A.beta.m, A.names);
    write_table(os, "bracket", A.table, A.names, A.names, A.names);
    os << "}\n";
  }
  for (const auto& [name, A] : doc.assoc_algebras) {
    sep();
    os << "assocalgebra " << name << " {\n";
    write_generators(os, A.names, A.parity);
    write_map_section(os, "alpha", A.alpha.m, A.names);
    write_map_section(os, "beta", A.beta.m, A.names);
    write_table(os, "product", A.table, A.names, A.names, A.names);
    os << "}\n";
  }
  for (const auto& [name, s] : doc.superalgebras) {
    sep();
    os << "superalgebra " << name << " {\n";
    write_generators(os, s.names, s.parity);
    MatrixP alpha(s.dim(), std::vector<Poly>(s.dim())), beta = alpha;
    for (size_t i = 0; i < s.dim(); ++i)
      for (size_t j = 0; j < s.dim(); ++j) {
        alpha[i][j] = Poly(s.alpha.at(i, j));
        beta[i][j] = Poly(s.beta.at(i, j));
      }
    write_map_section(os, "alpha", alpha, s.names);
    write_map_section(os, "beta", beta, s.names);
    for (size_t i = 0; i < s.dim(); ++i)
      for (size_t j = 0; j < s.dim(); ++j) {
        std::vector<Poly> comps(s.dim());
        bool nonzero = false;
        for (size_t k = 0; k < s.dim(); ++k) {
          comps[k] = Poly(s.c[i][j][k]);
          if (!comps[k].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        os << "  bracket [" << s.names[i] << ", " << s.names[j]
           << "] = " << render_element(comps, s.names, true) << ";\n";
      }
    os << "}\n";
  }
  for (const auto& m : doc.modules) {
    sep();
    os << "module " << m.name << " of " << m.algebra << " {\n";
    write_generators(os, m.module.names, m.module.parity);
    write_map_section(os, "phi", m.module.phi.m, m.module.names);
    write_map_section(os, "psi", m.module.psi.m, m.module.names);
    const Algebra* A = doc.find_algebra(m.algebra);
    write_table(os, "action", m.module.rho, A->names, m.module.names, m.module.names);
    os << "}\n";
  }
  for (const auto& f : doc.maps) {
    sep();
    os << "map " << f.name << " on " << f.algebra << " {\n";
    os << "  parity: " << parity_name(f.map.parity) << ";\n";
    const Algebra* A = doc.find_algebra(f.algebra);
    write_map_section(os, "entries", f.map.entries, A->names);
    os << "}\n";
  }
  for (const auto& o : doc.ooperators) {
    sep();
    os << "ooperator " << o.name << " on " << o.module << " {\n";
    const SourceDocument::ModuleDef* M = doc.find_module(o.module);
    const Algebra* A = doc.find_algebra(M->algebra);
    os << "  entries: ";
    for (size_t u = 0; u < M->module.rank(); ++u) {
      if (u) os << ", ";
      std::vector<Poly> col(A->rank());
      for (size_t j = 0; j < A->rank(); ++j) col[j] = o.op.t[j][u];
      os << M->module.names[u] << " -> " << render_element(col, A->names, true);
    }
    os << ";\n}\n";
  }
  return os.str();
}

} // namespace bhc
