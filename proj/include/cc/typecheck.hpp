#ifndef CC_TYPECHECK_HPP
#define CC_TYPECHECK_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cc/support.hpp"
#include "cc/term.hpp"
#include "cc/type.hpp"

namespace cc {

// Types of the names, constructed for a particular program. Entries keep
// their insertion order so signatures print stably.
class Signature {
public:
  Signature() = default;

  bool contains(const Name& n) const { return index_.count(n.text) != 0; }
  const Type* find(const Name& n) const;
  const std::vector<std::pair<Name, Type>>& entries() const { return entries_; }

  // Throws DuplicateDefinitionError on a repeated name.
  void add(Name n, Type t);

private:
  std::vector<std::pair<Name, Type>> entries_;
  std::map<std::string, std::size_t> index_;
};

// Temporary variable typings used to check rule bodies.
using Context = std::map<std::string, Type>;

enum class TypeErrorKind {
  UnknownName,
  UnknownVar,
  NotAFunction,
  ArgMismatch,
  RuleHeadMismatch,
  BodyNotBot,
  DuplicateRule,
  BadSignatureShape,
};

const char* to_string(TypeErrorKind k);

struct TypeError {
  TypeErrorKind kind;
  std::string message;   // mentions the offending name/subterm
  std::string subject;   // rule head or name the error belongs to, if any
};

// Syntax-directed type synthesis. Conversion is folded into application:
// the function type is driven to an arrow with head_arrow and the argument
// is compared with type_eq.
Expected<Type, TypeError> infer(const Signature& sig, const Context& ctx,
                                const Term& t);

// Checks one rule against the signature: the head type must peel exactly
// |params| argument types and end in _|_, and the body must infer _|_ in
// the context typing each parameter with its slot. The head must not be
// defined in p yet.
std::optional<TypeError> check_rule(const Signature& sig, const Program& p,
                                    const Rule& r);

// Every rule is checked against the program minus itself, so mutual
// recursion is fine; signature entries are shape-validated first. Empty
// result means well-typed.
std::vector<TypeError> check_program(const Signature& sig, const Program& p);

struct CircularityError {
  std::string message;
  std::vector<std::string> cycle;  // names on the offending path, if any
};

// Membership test for the open rule set: every name in r's body must be a
// generated name (constructor or iterator), or the head of an
// already-admitted rule of p that does not reach r.head through p's rules.
std::optional<CircularityError> check_non_circular(
    const Program& p, const std::set<std::string>& generated, const Rule& r);

}  // namespace cc

#endif
