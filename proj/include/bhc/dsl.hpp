#ifndef BHC_DSL_HPP
#define BHC_DSL_HPP

#include "bhc/confmap.hpp"
#include "bhc/ooperator.hpp"
#include "bhc/repmodule.hpp"
#include "bhc/superalgebra.hpp"

#include <string>
#include <vector>

namespace bhc {

// Position-annotated syntax or resolution error.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line), col_(col)
  {
  }
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

// Parsed definitions, in declaration order.  Names are unique across all
// kinds; modules refer to algebras and operators to modules defined
// earlier in the same document.
struct SourceDocument {
  std::vector<std::pair<std::string, Algebra>> algebras;
  std::vector<std::pair<std::string, AssocConformal>> assoc_algebras;
  std::vector<std::pair<std::string, SuperAlgebraFD>> superalgebras;

  struct ModuleDef {
    std::string name;
    std::string algebra;
    RepModule module;
  };
  std::vector<ModuleDef> modules;

  struct MapDef {
    std::string name;
    std::string algebra;
    ConfMap map;
  };
  std::vector<MapDef> maps;

  struct OOperatorDef {
    std::string name;
    std::string module;
    OOperator op;
  };
  std::vector<OOperatorDef> ooperators;

  const Algebra* find_algebra(const std::string& name) const;
  const AssocConformal* find_assoc(const std::string& name) const;
  const SuperAlgebraFD* find_superalgebra(const std::string& name) const;
  const ModuleDef* find_module(const std::string& name) const;
  const MapDef* find_map(const std::string& name) const;
  const OOperatorDef* find_ooperator(const std::string& name) const;
};

SourceDocument parse_document(const std::string& text);

// Canonical text form: fixed section order, the structure maps written in
// full, only nonzero table entries, polynomials in degree-lex order with
// d before the slots.  parse(serialize(doc)) reproduces doc exactly and
// serialize(parse(text)) is idempotent.
std::string serialize_document(const SourceDocument& doc);

// Renders a module element / bracket value in the canonical form used by
// both the serializer and the reports ("(d + 2*x)*L + ...", "0").
std::string render_element(const std::vector<Poly>& comps,
                           const std::vector<std::string>& names, bool single_slot);
std::string render_lvalue(const LValue& v, const std::vector<std::string>& names);

} // namespace bhc

#endif
