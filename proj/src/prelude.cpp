#include "cc/prelude.hpp"

#include "cc/eval.hpp"
#include "cc/printer.hpp"

namespace cc {

const DataTypeDecl* Prelude::find_decl(const std::string& name) const {
  for (const DataTypeDecl& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

const Type* Prelude::find_type(const std::string& name) const {
  for (const auto& [n, t] : types)
    if (n == name) return &t;
  return nullptr;
}

namespace {

struct HandDef {
  Name name;
  Type type;
  Rule rule;
};

// Everything the prelude contains, in emission order. Both build_prelude
// and prelude_source_text walk this same structure.
struct Parts {
  std::vector<DataTypeDecl> decls;
  std::vector<GeneratedBundle> ctor_bundles;
  std::vector<GeneratedBundle> iter_bundles;
  std::vector<HandDef> hand;
  TypeAbbrevs types;
};

Term tv(const std::string& v) { return Term::var(v); }
Term tn(const std::string& n) { return Term::name(n); }

Term apps(Term t, std::initializer_list<Term> args) {
  for (const Term& a : args) t = Term::app(t, a);
  return t;
}

std::vector<Var> vars(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

Parts build_parts() {
  Parts parts;

  DataTypeDecl boolD{"Bool", {}, {CtorDecl{Name("True"), {}},
                                  CtorDecl{Name("False"), {}}}};
  DataTypeDecl natD{"Nat", {}, {CtorDecl{Name("Zero"), {}},
                                CtorDecl{Name("Succ"), {ArgType::rec()}}}};
  Type nat = compile_type(natD);
  DataTypeDecl listD{"List", {}, {CtorDecl{Name("Nil"), {}},
                                  CtorDecl{Name("Cons"),
                                           {ArgType::ext(nat), ArgType::rec()}}}};
  DataTypeDecl treeD{"Tree", {}, {CtorDecl{Name("Leaf"), {}},
                                  CtorDecl{Name("Join"),
                                           {ArgType::ext(nat), ArgType::rec(),
                                            ArgType::rec()}}}};
  parts.decls = {boolD, natD, listD, treeD};
  for (const DataTypeDecl& d : parts.decls) {
    parts.ctor_bundles.push_back(gen_constructors(d));
    parts.types.emplace_back(d.name, parts.ctor_bundles.back().cc_type);
  }

  parts.iter_bundles.push_back(gen_iter_cbn(natD, natD));
  parts.iter_bundles.push_back(gen_iter_cbv(natD, natD));
  parts.iter_bundles.push_back(gen_iter_cbn(listD, natD));
  parts.iter_bundles.push_back(gen_iter_cbv(listD, natD));

  Type bot = Type::bot();
  Type list = parts.types[2].second;
  Type not_nat = Type::neg(nat);
  Type nnot_nat = Type::neg(not_nat);

  auto def = [&parts](const char* name, Type ty,
                      std::initializer_list<const char*> params, Term body) {
    Name n(name);
    parts.hand.push_back(HandDef{n, std::move(ty), Rule(n, vars(params), body)});
  };

  def("Id", Type::arrow(bot, bot), {"x"}, tv("x"));
  def("F1", Type::arrow(nat, nnot_nat), {"x", "c"}, apps(tv("c"), {tv("x")}));
  def("F2", Type::arrow(nat, nnot_nat), {"x", "c"},
      apps(tv("c"), {apps(tn("Succ"), {tv("x")})}));

  def("AddCBV", Type::arrow(nat, Type::arrow(nat, nnot_nat)), {"n", "m", "c"},
      apps(tv("n"), {apps(tv("c"), {tv("m")}),
                     apps(tn("AddCBV'"), {tv("m"), tv("c")})}));
  def("AddCBV'", Type::arrow(nat, Type::arrow(not_nat, Type::arrow(nat, bot))),
      {"m", "c", "n'"},
      apps(tn("AddCBV"), {tv("n'"), apps(tn("Succ"), {tv("m")}), tv("c")}));

  def("AddCBN", Type::arrow(nat, Type::arrow(nat, nat)), {"n", "m", "c1", "c2"},
      apps(tv("n"), {apps(tv("m"), {tv("c1"), tv("c2")}),
                     apps(tn("AddCBN'"), {tv("m"), tv("c2")})}));
  def("AddCBN'", Type::arrow(nat, Type::arrow(not_nat, Type::arrow(nat, bot))),
      {"m", "c2", "n'"},
      apps(tv("c2"), {apps(tn("AddCBN"), {tv("n'"), tv("m")})}));

  def("StoreNat", Type::arrow(nat, nnot_nat), {"n", "r"},
      apps(tv("n"), {apps(tv("r"), {tn("Zero")}),
                     apps(tn("StoreNatA"), {tv("r")})}));
  def("StoreNatA", Type::arrow(not_nat, not_nat), {"r", "m"},
      apps(tn("StoreNat"), {tv("m"), apps(tn("StoreNatB"), {tv("r")})}));
  def("StoreNatB", Type::arrow(not_nat, not_nat), {"r", "m'"},
      apps(tv("r"), {apps(tn("Succ"), {tv("m'")})}));

  def("UnstoreNat", Type::arrow(nnot_nat, nat), {"f", "z", "s"},
      apps(tv("f"), {apps(tn("UseNat"), {tv("z"), tv("s")})}));
  def("UseNat", Type::arrow(bot, Type::arrow(not_nat, not_nat)),
      {"z", "s", "n"}, apps(tv("n"), {tv("z"), tv("s")}));

  def("LengthCBN", Type::arrow(list, nat), {"x", "c1", "c2"},
      apps(tn("ItCBN_List_Nat"), {tn("LengthCBN_1"), tn("LengthCBN_2"),
                                  tv("x"), tv("c1"), tv("c2")}));
  def("LengthCBN_1", nat, {"c1", "c2"}, apps(tn("Zero"), {tv("c1"), tv("c2")}));
  def("LengthCBN_2", Type::arrow(nat, Type::arrow(nat, nat)),
      {"x", "n", "c1", "c2"},
      apps(tn("Succ"), {tv("n"), tv("c1"), tv("c2")}));

  def("LengthCBV", Type::arrow(list, nnot_nat), {"x", "c"},
      apps(tn("ItCBV_List_Nat"), {tn("LengthCBV_1"), tn("LengthCBV_2"),
                                  tv("c"), tv("x")}));
  def("LengthCBV_1", nnot_nat, {"c"}, apps(tv("c"), {tn("Zero")}));
  def("LengthCBV_2", Type::arrow(nat, Type::arrow(nat, nnot_nat)),
      {"x", "n", "c"}, apps(tv("c"), {apps(tn("Succ"), {tv("n")})}));

  return parts;
}

const Parts& parts() {
  static const Parts p = build_parts();
  return p;
}

}  // namespace

Prelude build_prelude() {
  const Parts& p = parts();
  Prelude pre;
  pre.decls = p.decls;
  pre.types = p.types;
  for (const GeneratedBundle& b : p.ctor_bundles) {
    merge_bundle(pre.signature, pre.program, b);
    for (const auto& [n, o] : b.provenance) pre.generated.insert(n);
  }
  for (const GeneratedBundle& b : p.iter_bundles) {
    merge_bundle(pre.signature, pre.program, b);
    for (const auto& [n, o] : b.provenance) pre.generated.insert(n);
  }
  for (const HandDef& h : p.hand) {
    pre.signature.add(h.name, h.type);
    pre.program.add(h.rule);
  }
  return pre;
}

std::string prelude_source_text() {
  const Parts& p = parts();
  std::string out;
  for (const DataTypeDecl& d : p.decls) {
    out += print(d, p.types);
    out += '\n';
  }
  out += '\n';
  for (const GeneratedBundle& b : p.iter_bundles) {
    for (const auto& [n, t] : b.sig_entries) {
      out += "name " + n.text + " : " + print_abbrev(t, p.types);
      out += '\n';
    }
    for (const Rule& r : b.rules) {
      out += print(r);
      out += '\n';
    }
    out += '\n';
  }
  for (const HandDef& h : p.hand) {
    out += "name " + h.name.text + " : " + print_abbrev(h.type, p.types);
    out += '\n';
    out += print(h.rule);
    out += '\n';
  }
  return out;
}

HatBundle hat_value(const Prelude& pre, const Name& f1) {
  const Type* ty = pre.signature.find(f1);
  if (!ty) throw UnknownNameError("hat_value: '" + f1.text + "' not declared");
  const Type& nat = *pre.find_type("Nat");
  if (!type_eq(*ty, nat))
    throw Error("hat_value: '" + f1.text + "' is not of type Nat");
  Name h("Hat" + f1.text);
  return HatBundle{h, Rule(h, vars({"c"}), apps(tv("c"), {Term::name(f1)})),
                   Type::neg(Type::neg(nat))};
}

HatBundle hat_fun(const Prelude& pre, const Name& f2) {
  const Type* ty = pre.signature.find(f2);
  if (!ty) throw UnknownNameError("hat_fun: '" + f2.text + "' not declared");
  const Type& nat = *pre.find_type("Nat");
  if (!type_eq(*ty, Type::arrow(nat, nat)))
    throw Error("hat_fun: '" + f2.text + "' is not of type Nat -> Nat");
  Name h("Hat" + f2.text);
  return HatBundle{
      h,
      Rule(h, vars({"n", "c"}),
           apps(tv("c"), {Term::app(Term::name(f2), tv("n"))})),
      Type::arrow(nat, Type::neg(Type::neg(nat)))};
}

HatBundle hat_conts(const Prelude& pre, const Program& ambient, const Term& c1,
                    const Term& c2) {
  const Type& nat = *pre.find_type("Nat");
  std::set<std::string> avoid;
  for (const Rule& r : ambient.rules()) avoid.insert(r.head.text);
  for (const std::string& n : term_names(c1)) avoid.insert(n);
  for (const std::string& n : term_names(c2)) avoid.insert(n);
  Name h = mint_fresh("HatConts", 1, avoid).front();
  return HatBundle{h, Rule(h, vars({"n"}), apps(tv("n"), {c1, c2})),
                   Type::neg(nat)};
}

Term encode_nat(std::size_t n) {
  Term t = tn("Zero");
  for (std::size_t i = 0; i < n; ++i) t = Term::app(tn("Succ"), t);
  return t;
}

Value nat_value(std::size_t n) {
  Value v{"Zero", {}};
  for (std::size_t i = 0; i < n; ++i) {
    Value s{"Succ", {}};
    s.args.emplace_back(std::move(v));
    v = std::move(s);
  }
  return v;
}

std::optional<std::size_t> decode_nat(const Prelude& pre, const Term& t,
                                      std::size_t fuel) {
  auto v = decode(*pre.find_decl("Nat"), pre.program, t, fuel);
  if (!v) return std::nullopt;
  std::size_t n = 0;
  const Value* cur = &v.value();
  while (cur->ctor == "Succ") {
    ++n;
    cur = &cur->args[0].value();
  }
  return cur->ctor == "Zero" ? std::optional<std::size_t>(n) : std::nullopt;
}

Term encode_list(const std::vector<Term>& items) {
  Term t = tn("Nil");
  for (std::size_t i = items.size(); i-- > 0;)
    t = apps(tn("Cons"), {items[i], t});
  return t;
}

}  // namespace cc
