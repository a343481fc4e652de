#include "cc/type.hpp"

#include <map>
#include <mutex>
#include <set>
#include <variant>
#include <vector>

namespace cc {

namespace {
struct BotT {};
struct TyVarT {
  std::string name;
};
struct ArrowT {
  Type dom;
  Type cod;
};
struct MuT {
  std::string binder;
  Type body;
};
}  // namespace

struct Type::Node {
  std::variant<BotT, TyVarT, ArrowT, MuT> data;
};

Type Type::bot() {
  static const Type t{std::make_shared<const Node>(Node{BotT{}})};
  return t;
}

Type Type::tyvar(std::string name) {
  return Type(std::make_shared<const Node>(Node{TyVarT{std::move(name)}}));
}

Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const Node>(
      Node{ArrowT{std::move(dom), std::move(cod)}}));
}

Type Type::mu(std::string binder, Type body) {
  return Type(std::make_shared<const Node>(
      Node{MuT{std::move(binder), std::move(body)}}));
}

bool Type::is_bot() const { return std::holds_alternative<BotT>(node_->data); }
bool Type::is_tyvar() const { return std::holds_alternative<TyVarT>(node_->data); }
bool Type::is_arrow() const { return std::holds_alternative<ArrowT>(node_->data); }
bool Type::is_mu() const { return std::holds_alternative<MuT>(node_->data); }

const std::string* Type::tyvar_name() const {
  auto v = std::get_if<TyVarT>(&node_->data);
  return v ? &v->name : nullptr;
}

const Type* Type::dom() const {
  auto a = std::get_if<ArrowT>(&node_->data);
  return a ? &a->dom : nullptr;
}

const Type* Type::cod() const {
  auto a = std::get_if<ArrowT>(&node_->data);
  return a ? &a->cod : nullptr;
}

const std::string* Type::mu_binder() const {
  auto m = std::get_if<MuT>(&node_->data);
  return m ? &m->binder : nullptr;
}

const Type* Type::mu_body() const {
  auto m = std::get_if<MuT>(&node_->data);
  return m ? &m->body : nullptr;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->data.index() != b.node_->data.index()) return false;
  if (a.is_bot()) return true;
  if (a.is_tyvar()) return *a.tyvar_name() == *b.tyvar_name();
  if (a.is_arrow()) return *a.dom() == *b.dom() && *a.cod() == *b.cod();
  return *a.mu_binder() == *b.mu_binder() && *a.mu_body() == *b.mu_body();
}

namespace {

void collect_free(const Type& t, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  if (t.is_bot()) return;
  if (auto v = t.tyvar_name()) {
    if (!bound.count(*v)) out.insert(*v);
    return;
  }
  if (t.is_arrow()) {
    collect_free(*t.dom(), bound, out);
    collect_free(*t.cod(), bound, out);
    return;
  }
  bool fresh = bound.insert(*t.mu_binder()).second;
  collect_free(*t.mu_body(), bound, out);
  if (fresh) bound.erase(*t.mu_binder());
}

}  // namespace

std::set<std::string> free_tyvars(const Type& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

namespace {

bool occurs_free(const Type& t, const std::string& x) {
  return free_tyvars(t).count(x) != 0;
}

std::optional<ShapeError> check_tau(const std::string& binder, const Type& tau) {
  if (tau.is_tyvar() && *tau.tyvar_name() == binder) return std::nullopt;
  if (occurs_free(tau, binder))
    return ShapeError{"argument type mentions '" + binder +
                      "' without being exactly '" + binder + "'"};
  return std::nullopt;
}

std::optional<ShapeError> check_sigma(const std::string& binder,
                                      const Type& sigma, std::size_t index) {
  const Type* cur = &sigma;
  while (cur->is_arrow()) {
    if (auto err = check_tau(binder, *cur->dom())) return err;
    cur = cur->cod();
  }
  if (!cur->is_bot())
    return ShapeError{"continuation type " + std::to_string(index) +
                      " of mu-body does not end in _|_"};
  return std::nullopt;
}

std::optional<ShapeError> check_mu_body(const std::string& binder,
                                        const Type& body) {
  const Type* cur = &body;
  std::size_t i = 1;
  while (cur->is_arrow()) {
    if (auto err = check_sigma(binder, *cur->dom(), i)) return err;
    cur = cur->cod();
    ++i;
  }
  if (!cur->is_bot()) return ShapeError{"mu-body does not end in _|_"};
  return std::nullopt;
}

}  // namespace

std::optional<ShapeError> validate_mu_shape(const Type& t) {
  if (t.is_bot() || t.is_tyvar()) return std::nullopt;
  if (t.is_arrow()) {
    if (auto err = validate_mu_shape(*t.dom())) return err;
    return validate_mu_shape(*t.cod());
  }
  if (auto err = check_mu_body(*t.mu_binder(), *t.mu_body())) return err;
  return validate_mu_shape(*t.mu_body());
}

Type subst_tyvar(const Type& t, const std::string& x, const Type& s) {
  if (t.is_bot()) return t;
  if (auto v = t.tyvar_name()) return *v == x ? s : t;
  if (t.is_arrow())
    return Type::arrow(subst_tyvar(*t.dom(), x, s), subst_tyvar(*t.cod(), x, s));
  const std::string& b = *t.mu_binder();
  if (b == x) return t;  // x is shadowed
  if (occurs_free(s, b) && occurs_free(*t.mu_body(), x)) {
    // rename the binder away from the free variables of s
    std::string fresh = b;
    do {
      fresh += "'";
    } while (occurs_free(s, fresh) || occurs_free(*t.mu_body(), fresh) ||
             fresh == x);
    Type renamed = subst_tyvar(*t.mu_body(), b, Type::tyvar(fresh));
    return Type::mu(fresh, subst_tyvar(renamed, x, s));
  }
  return Type::mu(b, subst_tyvar(*t.mu_body(), x, s));
}

Type unfold_mu(const Type& t) {
  if (!t.is_mu()) throw NotAMuError("unfold_mu: not a mu-type");
  // unfolding is pure; cache per node so type checking does not rebuild the
  // same tree over and over (the cached entry keeps the key node alive)
  static std::mutex mu;
  static std::map<const void*, std::pair<Type, Type>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t.identity());
    if (it != cache.end()) return it->second.second;
  }
  Type out = subst_tyvar(*t.mu_body(), *t.mu_binder(), t);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(t.identity(), std::make_pair(t, out))
      .first->second.second;
}

std::optional<std::pair<Type, Type>> head_arrow(const Type& t) {
  Type cur = t;
  // shape-valid types expose an arrow (or bottom) after one unfold; the cap
  // keeps this total on malformed input
  for (int guard = 0; cur.is_mu() && guard < 64; ++guard) cur = unfold_mu(cur);
  if (!cur.is_arrow()) return std::nullopt;
  return std::make_pair(*cur.dom(), *cur.cod());
}

namespace {

void render_key(const Type& t, std::vector<std::string>& binders,
                std::string& out) {
  if (t.is_bot()) {
    out += '!';
    return;
  }
  if (auto v = t.tyvar_name()) {
    for (std::size_t i = binders.size(); i-- > 0;) {
      if (binders[i] == *v) {
        out += '%';
        out += std::to_string(binders.size() - 1 - i);
        return;
      }
    }
    out += '\'';
    out += *v;
    out += '\'';
    return;
  }
  if (t.is_arrow()) {
    out += '(';
    render_key(*t.dom(), binders, out);
    out += '>';
    render_key(*t.cod(), binders, out);
    out += ')';
    return;
  }
  out += "(u.";
  binders.push_back(*t.mu_binder());
  render_key(*t.mu_body(), binders, out);
  binders.pop_back();
  out += ')';
}

}  // namespace

std::string type_key(const Type& t) {
  std::string out;
  std::vector<std::string> binders;
  render_key(t, binders, out);
  return out;
}

namespace {

using KeyPair = std::pair<std::string, std::string>;

KeyPair make_pair_key(const std::string& a, const std::string& b) {
  return a <= b ? KeyPair{a, b} : KeyPair{b, a};
}

// Coinductive comparison: pairs under consideration are assumed equal, so
// re-encountering a pair closes the loop. Terminates because shape-valid
// mu-types are regular trees with finitely many distinct subterm keys.
// Keys are only rendered when a mu is involved; the common case is the
// structural fast path.
bool eq_rec(const Type& a, const Type& b, std::set<KeyPair>& memo) {
  if (a == b) return true;
  if (!a.is_mu() && !b.is_mu()) {
    if (a.is_arrow() && b.is_arrow())
      return eq_rec(*a.dom(), *b.dom(), memo) &&
             eq_rec(*a.cod(), *b.cod(), memo);
    return false;  // distinct leaves, or leaf against arrow
  }
  KeyPair key = make_pair_key(type_key(a), type_key(b));
  if (key.first == key.second) return true;  // alpha-variants
  if (memo.count(key)) return true;
  memo.insert(key);
  if (a.is_mu()) return eq_rec(unfold_mu(a), b, memo);
  return eq_rec(a, unfold_mu(b), memo);
}

}  // namespace

bool type_eq(const Type& a, const Type& b) {
  std::set<KeyPair> memo;
  return eq_rec(a, b, memo);
}

}  // namespace cc
