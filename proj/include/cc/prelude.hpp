#ifndef CC_PRELUDE_HPP
#define CC_PRELUDE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cc/datatype.hpp"
#include "cc/term.hpp"
#include "cc/typecheck.hpp"

namespace cc {

// The stock program: Bool, Nat, List (over Nat), Tree (over Nat), their
// constructors, the Nat->Nat and List->Nat iterators in both styles, the
// call-by-value and call-by-name addition pairs, the storage operators,
// the length functions, and the small helpers Id, F1, F2.
struct Prelude {
  Signature signature;
  Program program;
  std::vector<DataTypeDecl> decls;
  std::vector<std::pair<std::string, Type>> types;  // data type name -> cc type
  std::set<std::string> generated;                  // constructors + iterators

  const DataTypeDecl* find_decl(const std::string& name) const;
  const Type* find_type(const std::string& name) const;
};

// Built once from the generators plus the hand-written rules; the whole
// program passes check_program (tested). Immutable and shareable.
Prelude build_prelude();

// The same prelude as a source file in the surface syntax. Parsing this
// text elaborates to a program identical to build_prelude()'s.
std::string prelude_source_text();

// Hat transforms bridging call-by-name and call-by-value.
struct HatBundle {
  Name name;
  Rule rule;
  Type type;
};

// Hat<f1>.c -> c.f1 at type ~~Nat; f1 must be declared at type Nat.
HatBundle hat_value(const Prelude& pre, const Name& f1);

// Hat<f2>.n.c -> c.(f2.n) at type Nat -> ~~Nat; f2 must be declared at
// type Nat -> Nat.
HatBundle hat_fun(const Prelude& pre, const Name& f2);

// Fresh name H with H.n -> n.c1.c2 at type ~Nat; c1 and c2 are embedded
// terms expected at types _|_ and Nat -> _|_.
HatBundle hat_conts(const Prelude& pre, const Program& ambient, const Term& c1,
                    const Term& c2);

// Numerals: Succ^n.Zero.
Term encode_nat(std::size_t n);
Value nat_value(std::size_t n);
std::optional<std::size_t> decode_nat(const Prelude& pre, const Term& t,
                                      std::size_t fuel);

// Cons.t1.(Cons.t2. ... .Nil)
Term encode_list(const std::vector<Term>& items);

}  // namespace cc

#endif
