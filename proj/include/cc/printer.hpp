#ifndef CC_PRINTER_HPP
#define CC_PRINTER_HPP

#include <string>
#include <utility>
#include <vector>

#include "cc/datatype.hpp"
#include "cc/term.hpp"
#include "cc/type.hpp"
#include "cc/typecheck.hpp"

namespace cc {

// Canonical text forms. Parentheses are minimal: only around application
// arguments that are themselves applications, and around arrow/mu domains.

std::string print(const Term& t);
std::string print(const Type& t);

// Full item lines as they appear in a source file.
std::string print(const Rule& r);                       // rule LHS -> RHS
std::string print(const Name& n, const Type& t);        // name N : T
std::string print(const Signature& sig);                // one line per entry
std::string print(const Program& p);                    // one line per rule

using TypeAbbrevs = std::vector<std::pair<std::string, Type>>;

// As print, but subterms syntactically equal to an abbreviation render as
// its name. Used when emitting source files against declared data types.
std::string print_abbrev(const Type& t, const TypeAbbrevs& abbrevs);

// data D(A, ...) = C1 | C2(arg, ...)
std::string print(const DataTypeDecl& d, const TypeAbbrevs& abbrevs);

}  // namespace cc

#endif
