#include "cc/term.hpp"

#include <algorithm>
#include <cctype>
#include <variant>

namespace cc {

namespace {

bool name_tail_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '^' ||
         c == '_' || c == '{' || c == '}' || c == '#';
}

bool var_tail_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '_';
}

}  // namespace

bool Name::valid(const std::string& t) {
  if (t.empty() || !std::isupper(static_cast<unsigned char>(t[0]))) return false;
  return std::all_of(t.begin() + 1, t.end(), name_tail_char);
}

Name::Name(std::string t) : text(std::move(t)) {
  if (!valid(text)) throw Error("invalid name: '" + text + "'");
}

bool Var::valid(const std::string& t) {
  if (t.empty() || !std::islower(static_cast<unsigned char>(t[0]))) return false;
  return std::all_of(t.begin() + 1, t.end(), var_tail_char);
}

Var::Var(std::string t) : text(std::move(t)) {
  if (!valid(text)) throw Error("invalid variable: '" + text + "'");
}

struct App {
  Term fun;
  Term arg;
};

struct Term::Node {
  std::variant<Name, Var, App> data;
  std::size_t hash;
  bool closed;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::name(Name n) {
  std::size_t h = mix(1, std::hash<std::string>{}(n.text));
  return Term(std::make_shared<const Node>(Node{std::move(n), h, true}));
}

Term Term::var(Var v) {
  std::size_t h = mix(2, std::hash<std::string>{}(v.text));
  return Term(std::make_shared<const Node>(Node{std::move(v), h, false}));
}

Term Term::app(Term fun, Term arg) {
  std::size_t h = mix(mix(3, fun.hash()), arg.hash());
  bool closed = fun.closed() && arg.closed();
  return Term(std::make_shared<const Node>(
      Node{App{std::move(fun), std::move(arg)}, h, closed}));
}

bool Term::is_name() const { return std::holds_alternative<Name>(node_->data); }
bool Term::is_var() const { return std::holds_alternative<Var>(node_->data); }
bool Term::is_app() const { return std::holds_alternative<App>(node_->data); }

const Name* Term::as_name() const { return std::get_if<Name>(&node_->data); }
const Var* Term::as_var() const { return std::get_if<Var>(&node_->data); }

const Term* Term::fun() const {
  auto a = std::get_if<App>(&node_->data);
  return a ? &a->fun : nullptr;
}

const Term* Term::arg() const {
  auto a = std::get_if<App>(&node_->data);
  return a ? &a->arg : nullptr;
}

bool Term::closed() const { return node_->closed; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  if (a.node_->data.index() != b.node_->data.index()) return false;
  if (auto n = a.as_name()) return *n == *b.as_name();
  if (auto v = a.as_var()) return *v == *b.as_var();
  return *a.fun() == *b.fun() && *a.arg() == *b.arg();
}

Term head(const Term& t) {
  const Term* cur = &t;
  while (const Term* f = cur->fun()) cur = f;
  return *cur;
}

std::size_t length(const Term& t) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (const Term* f = cur->fun()) {
    ++n;
    cur = f;
  }
  return n;
}

Spine spine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is_app()) {
    args.push_back(*cur->arg());
    cur = cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return Spine{*cur, std::move(args)};
}

Term fold_spine(Term head, const std::vector<Term>& args) {
  Term t = std::move(head);
  for (const Term& a : args) t = Term::app(t, a);
  return t;
}

namespace {

void collect_names(const Term& t, std::set<std::string>& out) {
  if (auto n = t.as_name()) {
    out.insert(n->text);
  } else if (t.is_app()) {
    collect_names(*t.fun(), out);
    collect_names(*t.arg(), out);
  }
}

}  // namespace

std::set<std::string> term_names(const Term& t) {
  std::set<std::string> out;
  collect_names(t, out);
  return out;
}

Term substitute(const Term& body, const Env& env) {
  if (body.is_name()) return body;
  if (auto v = body.as_var()) {
    auto it = env.find(*v);
    if (it == env.end())
      throw UnboundVariableError("unbound variable '" + v->text + "'");
    return it->second;
  }
  return Term::app(substitute(*body.fun(), env), substitute(*body.arg(), env));
}

Rule::Rule(Name h, std::vector<Var> ps, Term b)
    : head(std::move(h)), params(std::move(ps)), body(std::move(b)) {
  std::set<std::string> seen;
  for (const Var& v : params) {
    if (!seen.insert(v.text).second)
      throw Error("rule " + head.text + ": duplicate parameter '" + v.text + "'");
  }
  // free variables of the body must be among the parameters
  std::vector<const Term*> stack{&body};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (auto v = t->as_var()) {
      if (!seen.count(v->text))
        throw Error("rule " + head.text + ": body mentions unknown variable '" +
                    v->text + "'");
    } else if (t->is_app()) {
      stack.push_back(t->fun());
      stack.push_back(t->arg());
    }
  }
}

const Rule* Program::find(const Name& n) const {
  auto it = index_.find(n.text);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

void Program::add(Rule r) {
  if (defines(r.head))
    throw DuplicateDefinitionError("name '" + r.head.text +
                                   "' is already defined");
  index_.emplace(r.head.text, rules_.size());
  rules_.push_back(std::move(r));
}

Program add_rule(const Program& p, Rule r) {
  Program q = p;
  q.add(std::move(r));
  return q;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Undefined: return "undefined";
    case Classification::Complete: return "complete";
    case Classification::Incomplete: return "incomplete";
    case Classification::Invalid: return "invalid";
  }
  return "?";
}

std::optional<std::size_t> arity_of_name(const Program& p, const Name& n) {
  const Rule* r = p.find(n);
  if (!r) return std::nullopt;
  return r->params.size();
}

Classification classify(const Program& p, const Term& t) {
  Term h = head(t);
  const Name* n = h.as_name();
  if (!n) return Classification::Undefined;
  auto arity = arity_of_name(p, *n);
  if (!arity) return Classification::Undefined;
  std::size_t len = length(t);
  if (*arity == len) return Classification::Complete;
  return *arity > len ? Classification::Incomplete : Classification::Invalid;
}

}  // namespace cc
