#ifndef CC_DATATYPE_HPP
#define CC_DATATYPE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cc/eval.hpp"
#include "cc/support.hpp"
#include "cc/term.hpp"
#include "cc/type.hpp"
#include "cc/typecheck.hpp"

namespace cc {

// One constructor argument slot: the data type itself, or a type that does
// not mention it (first-order restriction).
class ArgType {
public:
  static ArgType rec() { return ArgType(std::nullopt); }
  static ArgType ext(Type t) { return ArgType(std::move(t)); }

  bool is_rec() const { return !ext_.has_value(); }
  const Type& ext_type() const { return *ext_; }

  friend bool operator==(const ArgType& a, const ArgType& b) {
    if (a.is_rec() != b.is_rec()) return false;
    return a.is_rec() || a.ext_type() == b.ext_type();
  }

private:
  explicit ArgType(std::optional<Type> t) : ext_(std::move(t)) {}
  std::optional<Type> ext_;
};

struct CtorDecl {
  Name name;
  std::vector<ArgType> args;

  friend bool operator==(const CtorDecl& a, const CtorDecl& b) {
    return a.name == b.name && a.args == b.args;
  }
};

// A first-order algebraic data type. Params are opaque type-variable
// names; a parametric declaration is compiled with its parameters treated
// as opaque atoms.
struct DataTypeDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<CtorDecl> ctors;

  const CtorDecl* find_ctor(const std::string& cname) const;

  friend bool operator==(const DataTypeDecl& a, const DataTypeDecl& b) {
    return a.name == b.name && a.params == b.params && a.ctors == b.ctors;
  }
};

// Distinct constructor names; ext types must not mention the declared name.
std::optional<std::string> validate_decl(const DataTypeDecl& d);

enum class Origin { Constructor, CbnIter, CbvIter, Lambda };

// What a declaration (or an iterator request) compiles to. For constructor
// bundles cc_type is the mu-type of the declaration; for iterator bundles
// it is the type of the main iterator name.
struct GeneratedBundle {
  Type cc_type;
  std::vector<std::pair<Name, Type>> sig_entries;
  std::vector<Rule> rules;
  std::map<std::string, Origin> provenance;
};

// Adds all entries and rules of b; throws DuplicateDefinitionError when a
// name clashes with the ambient signature or program.
void merge_bundle(Signature& sig, Program& prog, const GeneratedBundle& b);

// mu X . (D1[X/D] -> _|_) -> ... -> (Dn[X/D] -> _|_) -> _|_
// Throws Error when the declaration is invalid (see validate_decl).
Type compile_type(const DataTypeDecl& d);

// Signature entries Ci : Di -> D and the destructor rules
// Ci.x1.....xai.c1.....cn -> ci.x1.....xai.
GeneratedBundle gen_constructors(const DataTypeDecl& d);

// Abstract value trees for encode/decode. Rec slots hold nested values,
// ext slots hold already-encoded payload terms.
struct ValueArg;

struct Value {
  std::string ctor;
  std::vector<ValueArg> args;
};

struct ValueArg {
  std::variant<Value, Term> v;

  ValueArg(Value val) : v(std::move(val)) {}
  ValueArg(Term t) : v(std::move(t)) {}
  bool is_value() const { return std::holds_alternative<Value>(v); }
  const Value& value() const { return std::get<Value>(v); }
  const Term& term() const { return std::get<Term>(v); }
};

bool operator==(const Value& a, const Value& b);

// Fold the constructors over the value tree. Throws
// ConstructorMismatchError when v does not fit d.
Term encode(const DataTypeDecl& d, const Value& v);

enum class DecodeFailureKind { FuelExhausted, NotAValue };

struct DecodeFailure {
  DecodeFailureKind kind;
  std::string message;
};

// Inverse of encode, by observation only: evaluate t, apply it to one
// fresh continuation per constructor, evaluate again, see which
// continuation received which payloads, recurse on recursive slots.
Expected<Value, DecodeFailure> decode(const DataTypeDecl& d, const Program& p,
                                      const Term& t, std::size_t fuel);

// Call-by-name iterator for D to B:
//   ItCBN_D_B.f1...fn.x.c1...cm       -> x.(ItCBN_D_B_C1.f.c)...(ItCBN_D_B_Cn.f.c)
//   ItCBN_D_B_Ci.f1...fn.c1...cm.x... -> fi.b(x1)...b(xai).c1...cm
// where b(x) wraps recursive slots in ItCBN_D_B.f1...fn.x.
GeneratedBundle gen_iter_cbn(const DataTypeDecl& dD, const DataTypeDecl& dB);

// Call-by-value iterator for D to B, with one staged name per constructor
// argument; recursive slots are evaluated through the iterator before the
// per-constructor function fires.
GeneratedBundle gen_iter_cbv(const DataTypeDecl& dD, const DataTypeDecl& dB);

// Optional peephole pass: inline the single-use stage of nullary
// constructors (ItX_..._Ci_1.f.c becomes fi.c inside the dispatch rule).
// Not applied by the generators.
GeneratedBundle inline_nullary_stages(const GeneratedBundle& b);

// Mint a fresh name Lam#k and return the rule Lam#k.params -> body.
std::pair<Name, Rule> lambda_lift(const std::vector<Var>& params,
                                  const Term& body, const Program& ambient);

// Monomorphize a parametric declaration at concrete types; the declaration
// and its constructors are renamed with the given label suffix so distinct
// instantiations coexist.
DataTypeDecl instantiate(const DataTypeDecl& d, const std::vector<Type>& args,
                         const std::string& label);

}  // namespace cc

#endif
