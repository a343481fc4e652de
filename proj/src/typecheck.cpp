#include "cc/typecheck.hpp"

#include "cc/printer.hpp"

namespace cc {

const Type* Signature::find(const Name& n) const {
  auto it = index_.find(n.text);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

void Signature::add(Name n, Type t) {
  if (contains(n))
    throw DuplicateDefinitionError("signature already contains '" + n.text + "'");
  index_.emplace(n.text, entries_.size());
  entries_.emplace_back(std::move(n), std::move(t));
}

const char* to_string(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::UnknownName: return "UnknownName";
    case TypeErrorKind::UnknownVar: return "UnknownVar";
    case TypeErrorKind::NotAFunction: return "NotAFunction";
    case TypeErrorKind::ArgMismatch: return "ArgMismatch";
    case TypeErrorKind::RuleHeadMismatch: return "RuleHeadMismatch";
    case TypeErrorKind::BodyNotBot: return "BodyNotBot";
    case TypeErrorKind::DuplicateRule: return "DuplicateRule";
    case TypeErrorKind::BadSignatureShape: return "BadSignatureShape";
  }
  return "?";
}

Expected<Type, TypeError> infer(const Signature& sig, const Context& ctx,
                                const Term& t) {
  if (auto n = t.as_name()) {
    if (const Type* ty = sig.find(*n)) return *ty;
    return TypeError{TypeErrorKind::UnknownName,
                     "name '" + n->text + "' has no signature entry", n->text};
  }
  if (auto v = t.as_var()) {
    auto it = ctx.find(v->text);
    if (it != ctx.end()) return it->second;
    return TypeError{TypeErrorKind::UnknownVar,
                     "variable '" + v->text + "' not in context", v->text};
  }
  auto fun_ty = infer(sig, ctx, *t.fun());
  if (!fun_ty) return fun_ty;
  auto exposed = head_arrow(fun_ty.value());
  if (!exposed)
    return TypeError{TypeErrorKind::NotAFunction,
                     "term '" + print(*t.fun()) + "' of type '" +
                         print(fun_ty.value()) + "' is applied to an argument",
                     print(*t.fun())};
  auto arg_ty = infer(sig, ctx, *t.arg());
  if (!arg_ty) return arg_ty;
  if (!type_eq(arg_ty.value(), exposed->first))
    return TypeError{TypeErrorKind::ArgMismatch,
                     "argument '" + print(*t.arg()) + "' has type '" +
                         print(arg_ty.value()) + "' but '" +
                         print(exposed->first) + "' is expected",
                     print(*t.arg())};
  return exposed->second;
}

std::optional<TypeError> check_rule(const Signature& sig, const Program& p,
                                    const Rule& r) {
  const Type* head_ty = sig.find(r.head);
  if (!head_ty)
    return TypeError{TypeErrorKind::UnknownName,
                     "rule head '" + r.head.text + "' has no signature entry",
                     r.head.text};
  if (p.defines(r.head))
    return TypeError{TypeErrorKind::DuplicateRule,
                     "name '" + r.head.text + "' already has a rule",
                     r.head.text};
  Context ctx;
  Type remainder = *head_ty;
  for (const Var& param : r.params) {
    auto exposed = head_arrow(remainder);
    if (!exposed)
      return TypeError{TypeErrorKind::RuleHeadMismatch,
                       "type of '" + r.head.text + "' provides no slot for '" +
                           param.text + "'",
                       r.head.text};
    ctx.emplace(param.text, exposed->first);
    remainder = exposed->second;
  }
  if (!type_eq(remainder, Type::bot()))
    return TypeError{TypeErrorKind::RuleHeadMismatch,
                     "type of '" + r.head.text +
                         "' does not end in _|_ after its parameters",
                     r.head.text};
  auto body_ty = infer(sig, ctx, r.body);
  if (!body_ty) {
    TypeError err = body_ty.error();
    err.subject = r.head.text;
    return err;
  }
  if (!type_eq(body_ty.value(), Type::bot()))
    return TypeError{TypeErrorKind::BodyNotBot,
                     "body of '" + r.head.text + "' has type '" +
                         print(body_ty.value()) + "', expected _|_",
                     r.head.text};
  return std::nullopt;
}

std::vector<TypeError> check_program(const Signature& sig, const Program& p) {
  std::vector<TypeError> errors;
  for (const auto& [name, ty] : sig.entries()) {
    if (auto shape = validate_mu_shape(ty)) {
      errors.push_back(TypeError{TypeErrorKind::BadSignatureShape,
                                 "signature entry '" + name.text +
                                     "': " + shape->message,
                                 name.text});
    }
  }
  for (const Rule& r : p.rules()) {
    Program rest;
    for (const Rule& other : p.rules())
      if (!(other.head == r.head)) rest.add(other);
    if (auto err = check_rule(sig, rest, r)) errors.push_back(*err);
  }
  return errors;
}

namespace {

// Does `from` reach `target` through rule bodies of p? Generated names are
// opaque endpoints.
bool reaches(const Program& p, const std::set<std::string>& generated,
             const std::string& from, const std::string& target,
             std::set<std::string>& visited,
             std::vector<std::string>& path) {
  if (from == target) return true;
  if (generated.count(from) || !visited.insert(from).second) return false;
  const Rule* r = p.find(Name(from));
  if (!r) return false;
  path.push_back(from);
  for (const std::string& next : term_names(r->body))
    if (reaches(p, generated, next, target, visited, path)) return true;
  path.pop_back();
  return false;
}

}  // namespace

std::optional<CircularityError> check_non_circular(
    const Program& p, const std::set<std::string>& generated, const Rule& r) {
  for (const std::string& n : term_names(r.body)) {
    if (generated.count(n)) continue;
    if (n == r.head.text)
      return CircularityError{
          "rule '" + r.head.text + "' mentions itself", {r.head.text}};
    if (!p.defines(Name(n)))
      return CircularityError{"name '" + n +
                                  "' is neither a generated name nor an "
                                  "admitted non-circular rule",
                              {}};
    std::set<std::string> visited;
    std::vector<std::string> path;
    if (reaches(p, generated, n, r.head.text, visited, path)) {
      path.push_back(r.head.text);
      return CircularityError{
          "rule '" + r.head.text + "' is circular through '" + n + "'", path};
    }
  }
  return std::nullopt;
}

}  // namespace cc
