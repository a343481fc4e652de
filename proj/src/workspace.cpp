#include "cc/workspace.hpp"

namespace cc {

const DataTypeDecl* Workspace::find_decl(const std::string& name) const {
  for (const DataTypeDecl& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

Type resolve_type(const Type& t, const TypeAbbrevs& abbrevs,
                  std::set<std::string>& bound) {
  if (t.is_bot()) return t;
  if (auto v = t.tyvar_name()) {
    if (!bound.count(*v))
      for (const auto& [name, ty] : abbrevs)
        if (name == *v) return ty;
    return t;
  }
  if (t.is_arrow())
    return Type::arrow(resolve_type(*t.dom(), abbrevs, bound),
                       resolve_type(*t.cod(), abbrevs, bound));
  bool fresh = bound.insert(*t.mu_binder()).second;
  Type body = resolve_type(*t.mu_body(), abbrevs, bound);
  if (fresh) bound.erase(*t.mu_binder());
  return Type::mu(*t.mu_binder(), std::move(body));
}

}  // namespace

Type Workspace::resolve(const Type& t) const {
  std::set<std::string> bound;
  return resolve_type(t, abbrevs, bound);
}

namespace {

void merge_prelude(Workspace& ws, std::vector<Diagnostic>& diags, Span span) {
  const Prelude& pre = build_prelude();
  try {
    for (const auto& [n, t] : pre.signature.entries()) ws.sig.add(n, t);
    for (const Rule& r : pre.program.rules()) ws.prog.add(r);
  } catch (const DuplicateDefinitionError& e) {
    diags.push_back({Diagnostic::Severity::Error,
                     std::string("use prelude: ") + e.what(), span});
    return;
  }
  ws.decls.insert(ws.decls.end(), pre.decls.begin(), pre.decls.end());
  ws.abbrevs.insert(ws.abbrevs.end(), pre.types.begin(), pre.types.end());
  ws.generated.insert(pre.generated.begin(), pre.generated.end());
}

}  // namespace

Expected<Workspace, std::vector<Diagnostic>> elaborate(const SourceFile& f) {
  Workspace ws;
  std::vector<Diagnostic> diags;
  auto error = [&diags](Span span, const std::string& msg) {
    diags.push_back({Diagnostic::Severity::Error, msg, span});
  };

  for (const Item& item : f.items) {
    if (auto u = std::get_if<UseItem>(&item)) {
      if (u->what == "prelude")
        merge_prelude(ws, diags, u->span);
      else
        error(u->span, "unknown library '" + u->what + "'");
      continue;
    }
    if (auto d = std::get_if<DataItem>(&item)) {
      DataTypeDecl resolved = d->decl;
      for (CtorDecl& c : resolved.ctors)
        for (ArgType& a : c.args)
          if (!a.is_rec()) a = ArgType::ext(ws.resolve(a.ext_type()));
      if (auto err = validate_decl(resolved)) {
        error(d->span, *err);
        continue;
      }
      for (const auto& [name, ty] : ws.abbrevs) {
        if (name == resolved.name) {
          error(d->span, "data type '" + resolved.name + "' is already declared");
          break;
        }
      }
      if (ws.find_decl(resolved.name)) continue;
      try {
        GeneratedBundle b = gen_constructors(resolved);
        merge_bundle(ws.sig, ws.prog, b);
        ws.abbrevs.emplace_back(resolved.name, b.cc_type);
        for (const auto& [n, o] : b.provenance) ws.generated.insert(n);
        ws.decls.push_back(std::move(resolved));
      } catch (const Error& e) {
        error(d->span, e.what());
      }
      continue;
    }
    if (auto n = std::get_if<NameItem>(&item)) {
      Type resolved = ws.resolve(n->type);
      if (auto shape = validate_mu_shape(resolved)) {
        error(n->span, "name " + n->name.text + ": " + shape->message);
        continue;
      }
      try {
        ws.sig.add(n->name, std::move(resolved));
      } catch (const DuplicateDefinitionError& e) {
        error(n->span, e.what());
      }
      continue;
    }
    const RuleItem& r = std::get<RuleItem>(item);
    try {
      ws.prog.add(r.rule);
      ws.rule_spans.emplace(r.rule.head.text, r.span);
    } catch (const DuplicateDefinitionError& e) {
      error(r.span, e.what());
    }
  }
  if (!diags.empty()) return diags;
  return ws;
}

const GeneratedBundle& IteratorCache::ensure(Workspace& ws,
                                             const DataTypeDecl& d,
                                             const DataTypeDecl& b, bool cbv) {
  std::string key = std::string(cbv ? "ItCBV_" : "ItCBN_") + d.name + "_" + b.name;
  auto it = bundles_.find(key);
  if (it != bundles_.end()) return it->second;
  GeneratedBundle bundle = cbv ? gen_iter_cbv(d, b) : gen_iter_cbn(d, b);
  merge_bundle(ws.sig, ws.prog, bundle);
  for (const auto& [n, o] : bundle.provenance) ws.generated.insert(n);
  return bundles_.emplace(key, std::move(bundle)).first->second;
}

std::string expanded_text(const Workspace& ws) {
  // Full types, no abbreviations: the output is a self-contained program
  // that re-elaborates to the same signature and rules.
  std::string out;
  for (const auto& [n, t] : ws.sig.entries()) {
    out += print(n, t);
    out += '\n';
  }
  for (const Rule& r : ws.prog.rules()) {
    out += print(r);
    out += '\n';
  }
  return out;
}

}  // namespace cc
