#ifndef CC_SURFACE_HPP
#define CC_SURFACE_HPP

#include <string>
#include <variant>
#include <vector>

#include "cc/datatype.hpp"
#include "cc/support.hpp"
#include "cc/term.hpp"
#include "cc/type.hpp"

namespace cc {

struct Span {
  std::size_t line = 1;  // 1-based
  std::size_t col = 1;
};

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
  Span span;
};

std::string format(const Diagnostic& d);

// Source items keep their syntactic types: atoms such as Nat stay type
// variables until elaboration resolves them against the declared data
// types. parse . print is the identity on these items.
struct DataItem {
  DataTypeDecl decl;
  Span span;
};

struct NameItem {
  Name name;
  Type type;
  Span span;
};

struct RuleItem {
  Rule rule;
  Span span;
};

struct UseItem {
  std::string what;
  Span span;
};

using Item = std::variant<DataItem, NameItem, RuleItem, UseItem>;

struct SourceFile {
  std::vector<Item> items;
};

// Grammar (LL(1), // starts a line comment):
//   file    := item*
//   item    := "data" NAME params? "=" ctor ("|" ctor)*
//            | "name" NAME ":" type
//            | "rule" NAME ("." var)* "->" term
//            | "use" ident
//   ctor    := NAME ("(" argtype ("," argtype)* ")")?
//   term    := factor ("." factor)*
//   factor  := NAME | var | "(" term ")"
//   type    := prefix ("->" type)?          right-associative
//   prefix  := "~" prefix | atom
//   atom    := "_|_" | "mu" NAME "." type | NAME | "(" type ")"
// argtype additionally admits the declared type applied to its own
// parameters, which marks the slot as recursive.
Expected<SourceFile, std::vector<Diagnostic>> parse(const std::string& text);

Expected<Term, std::vector<Diagnostic>> parse_term(const std::string& text);
Expected<Type, std::vector<Diagnostic>> parse_type(const std::string& text);

// Canonical text of a source file; parse(to_text(f)) == f.
std::string to_text(const SourceFile& f);

bool operator==(const Item& a, const Item& b);

}  // namespace cc

#endif
