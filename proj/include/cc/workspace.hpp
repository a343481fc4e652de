#ifndef CC_WORKSPACE_HPP
#define CC_WORKSPACE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cc/datatype.hpp"
#include "cc/prelude.hpp"
#include "cc/printer.hpp"
#include "cc/surface.hpp"
#include "cc/typecheck.hpp"

namespace cc {

// A fully elaborated source file: declarations compiled to constructors,
// type atoms resolved, signature and program populated in item order.
struct Workspace {
  Signature sig;
  Program prog;
  std::vector<DataTypeDecl> decls;  // resolved
  TypeAbbrevs abbrevs;              // data type name -> cc type, in order
  std::set<std::string> generated;  // constructors + iterators
  std::map<std::string, Span> rule_spans;  // rule head -> source position

  const DataTypeDecl* find_decl(const std::string& name) const;

  // Replace free atoms naming declared data types by their mu-types.
  Type resolve(const Type& t) const;
};

Expected<Workspace, std::vector<Diagnostic>> elaborate(const SourceFile& f);

// Iterators are cached per (style, D, B); the first request generates and
// merges the bundle, later requests return the cached one.
class IteratorCache {
public:
  const GeneratedBundle& ensure(Workspace& ws, const DataTypeDecl& d,
                                const DataTypeDecl& b, bool cbv);

private:
  std::map<std::string, GeneratedBundle> bundles_;
};

// The elaborated program as re-parseable source: name lines for the whole
// signature followed by rule lines for the whole program.
std::string expanded_text(const Workspace& ws);

}  // namespace cc

#endif
