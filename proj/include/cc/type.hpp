#ifndef CC_TYPE_HPP
#define CC_TYPE_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "cc/support.hpp"

namespace cc {

// The CC type language: bottom, opaque type variables, arrows, and
// mu-types whose bodies are restricted to a tower of negated argument
// tuples ending in bottom. Arrows right-associate in the surface syntax.
// Values are immutable and structurally shared.
class Type {
public:
  static Type bot();
  static Type tyvar(std::string name);
  static Type arrow(Type dom, Type cod);
  static Type mu(std::string binder, Type body);

  // sigma -> bot
  static Type neg(Type t) { return arrow(std::move(t), bot()); }

  bool is_bot() const;
  bool is_tyvar() const;
  bool is_arrow() const;
  bool is_mu() const;

  const std::string* tyvar_name() const;
  const Type* dom() const;
  const Type* cod() const;
  const std::string* mu_binder() const;
  const Type* mu_body() const;

  // Stable identity of the shared node; an opaque cache key.
  const void* identity() const { return node_.get(); }

  // Strict syntactic equality (binder names included); use type_eq for
  // equality modulo mu-unfolding.
  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Free type variables (atoms not bound by an enclosing mu).
std::set<std::string> free_tyvars(const Type& t);

struct ShapeError {
  std::string message;
};

// Every mu X.Phi in t must satisfy: Phi = s1 -> ... -> sn -> bot (n >= 0),
// each si = t1 -> ... -> ta -> bot (a >= 0), and each tj is exactly X or
// does not contain X. Returns the first violation found.
std::optional<ShapeError> validate_mu_shape(const Type& t);

// Capture-avoiding replacement of free occurrences of x by s.
Type subst_tyvar(const Type& t, const std::string& x, const Type& s);

// Body with the binder replaced by the whole mu-type. Throws NotAMuError
// when t is not a mu node.
Type unfold_mu(const Type& t);

// Unfold mu nodes until an arrow is exposed; absent for bot and bare
// variables. On shape-valid types at most one unfold is ever needed.
std::optional<std::pair<Type, Type>> head_arrow(const Type& t);

// Equality generated by mu-conv and f-conv, i.e. equality of the infinite
// unfoldings. Decided by memoized coinductive comparison; memo keys are
// alpha-invariant renderings, so the choice of binder names cannot matter.
// Precondition: both types pass validate_mu_shape.
bool type_eq(const Type& a, const Type& b);

// Alpha-invariant key used by the type_eq memo; also a convenient stable
// identity for caching.
std::string type_key(const Type& t);

}  // namespace cc

#endif
