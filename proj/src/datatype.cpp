#include "cc/datatype.hpp"

#include <algorithm>
#include <set>

#include "cc/printer.hpp"

namespace cc {

const CtorDecl* DataTypeDecl::find_ctor(const std::string& cname) const {
  for (const CtorDecl& c : ctors)
    if (c.name.text == cname) return &c;
  return nullptr;
}

std::optional<std::string> validate_decl(const DataTypeDecl& d) {
  if (d.ctors.empty()) return "data type '" + d.name + "' has no constructors";
  std::set<std::string> seen;
  for (const CtorDecl& c : d.ctors) {
    if (!seen.insert(c.name.text).second)
      return "duplicate constructor '" + c.name.text + "'";
    for (const ArgType& a : c.args) {
      if (a.is_rec()) continue;
      if (free_tyvars(a.ext_type()).count(d.name))
        return "constructor '" + c.name.text + "' mentions '" + d.name +
               "' in a non-recursive argument position";
    }
  }
  return std::nullopt;
}

void merge_bundle(Signature& sig, Program& prog, const GeneratedBundle& b) {
  for (const auto& [n, t] : b.sig_entries) sig.add(n, t);
  for (const Rule& r : b.rules) prog.add(r);
}

namespace {

// Binder for the mu-type: "T" unless that collides with a free atom of
// some argument type.
std::string pick_binder(const DataTypeDecl& d) {
  std::set<std::string> taken;
  for (const CtorDecl& c : d.ctors)
    for (const ArgType& a : c.args)
      if (!a.is_rec())
        for (const std::string& v : free_tyvars(a.ext_type())) taken.insert(v);
  std::string candidate = "T";
  for (int i = 1; taken.count(candidate); ++i)
    candidate = "T" + std::to_string(i);
  return candidate;
}

Type arg_slot_type(const ArgType& a, const Type& rec_as) {
  return a.is_rec() ? rec_as : a.ext_type();
}

// a1 -> ... -> ak -> tail with recursive slots read as rec_as.
Type curried(const std::vector<ArgType>& args, const Type& rec_as, Type tail) {
  Type t = std::move(tail);
  for (std::size_t i = args.size(); i-- > 0;)
    t = Type::arrow(arg_slot_type(args[i], rec_as), t);
  return t;
}

std::vector<Var> numbered_vars(const std::string& stem, std::size_t from,
                               std::size_t to) {
  std::vector<Var> out;
  for (std::size_t i = from; i <= to; ++i)
    out.emplace_back(stem + std::to_string(i));
  return out;
}

Term apply_vars(Term t, const std::vector<Var>& vs) {
  for (const Var& v : vs) t = Term::app(t, Term::var(v));
  return t;
}

}  // namespace

Type compile_type(const DataTypeDecl& d) {
  if (auto err = validate_decl(d)) throw Error(*err);
  std::string binder = pick_binder(d);
  Type x = Type::tyvar(binder);
  // each slot is the uncurried D^i -> _|_, i.e. D^i_1 -> ... -> D^i_ai -> _|_
  Type body = Type::bot();
  for (std::size_t i = d.ctors.size(); i-- > 0;)
    body = Type::arrow(curried(d.ctors[i].args, x, Type::bot()), body);
  return Type::mu(binder, std::move(body));
}

GeneratedBundle gen_constructors(const DataTypeDecl& d) {
  Type dty = compile_type(d);
  GeneratedBundle b{dty, {}, {}, {}};
  std::size_t n = d.ctors.size();
  std::vector<Var> conts = numbered_vars("c", 1, n);
  for (const CtorDecl& c : d.ctors) {
    b.sig_entries.emplace_back(c.name, curried(c.args, dty, dty));
    std::vector<Var> payload = numbered_vars("x", 1, c.args.size());
    std::vector<Var> params = payload;
    params.insert(params.end(), conts.begin(), conts.end());
    Term body = apply_vars(Term::var(conts[&c - d.ctors.data()]), payload);
    b.rules.emplace_back(c.name, std::move(params), std::move(body));
    b.provenance.emplace(c.name.text, Origin::Constructor);
  }
  return b;
}

bool operator==(const Value& a, const Value& b) {
  if (a.ctor != b.ctor || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (a.args[i].is_value() != b.args[i].is_value()) return false;
    if (a.args[i].is_value()) {
      if (!(a.args[i].value() == b.args[i].value())) return false;
    } else if (a.args[i].term() != b.args[i].term()) {
      return false;
    }
  }
  return true;
}

Term encode(const DataTypeDecl& d, const Value& v) {
  const CtorDecl* c = d.find_ctor(v.ctor);
  if (!c)
    throw ConstructorMismatchError("'" + v.ctor + "' is not a constructor of " +
                                   d.name);
  if (c->args.size() != v.args.size())
    throw ConstructorMismatchError("constructor '" + v.ctor + "' takes " +
                                   std::to_string(c->args.size()) +
                                   " arguments, got " +
                                   std::to_string(v.args.size()));
  Term t = Term::name(c->name);
  for (std::size_t i = 0; i < v.args.size(); ++i) {
    if (c->args[i].is_rec() != v.args[i].is_value())
      throw ConstructorMismatchError("argument " + std::to_string(i + 1) +
                                     " of '" + v.ctor +
                                     "' mixes value and payload kinds");
    Term arg = c->args[i].is_rec() ? encode(d, v.args[i].value())
                                   : v.args[i].term();
    t = Term::app(std::move(t), std::move(arg));
  }
  return t;
}

Expected<Value, DecodeFailure> decode(const DataTypeDecl& d, const Program& p,
                                      const Term& t, std::size_t fuel) {
  // A value of type D is an incomplete normal form; evaluate first so lazy
  // representations settle before being observed.
  EvalOutcome pre = evaluate(p, t, fuel);
  if (pre.fuel_exhausted)
    return DecodeFailure{DecodeFailureKind::FuelExhausted,
                         "no normal form within fuel: " + print(pre.last)};
  std::set<std::string> avoid;
  for (const Rule& r : p.rules()) avoid.insert(r.head.text);
  for (const std::string& n : term_names(pre.last)) avoid.insert(n);
  std::vector<Name> conts = mint_fresh("C", d.ctors.size(), avoid);
  Term applied = pre.last;
  for (const Name& c : conts) applied = Term::app(applied, Term::name(c));
  EvalOutcome obs = evaluate(p, applied, fuel);
  if (obs.fuel_exhausted)
    return DecodeFailure{DecodeFailureKind::FuelExhausted,
                         "observation did not settle: " + print(obs.last)};
  Spine s = spine(obs.last);
  const Name* h = s.head.as_name();
  std::size_t which = conts.size();
  if (h)
    for (std::size_t i = 0; i < conts.size(); ++i)
      if (conts[i] == *h) which = i;
  if (which == conts.size())
    return DecodeFailure{DecodeFailureKind::NotAValue,
                         "observation ended at '" + print(obs.last) +
                             "', not at a fresh continuation"};
  const CtorDecl& ctor = d.ctors[which];
  if (s.args.size() != ctor.args.size())
    return DecodeFailure{DecodeFailureKind::NotAValue,
                         "constructor '" + ctor.name.text + "' delivered " +
                             std::to_string(s.args.size()) + " payloads, " +
                             std::to_string(ctor.args.size()) + " expected"};
  Value v{ctor.name.text, {}};
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (ctor.args[i].is_rec()) {
      auto sub = decode(d, p, s.args[i], fuel);
      if (!sub) return sub.error();
      v.args.emplace_back(std::move(sub.value()));
    } else {
      v.args.emplace_back(s.args[i]);
    }
  }
  return v;
}

namespace {

struct IterNames {
  std::string main;
  // CBN: one per constructor. CBV: stages[i][j-1] for j in [1, a_i+1].
  std::vector<std::vector<std::string>> stages;
};

IterNames iter_names(const char* prefix, const DataTypeDecl& dD,
                     const DataTypeDecl& dB, bool cbv) {
  IterNames out;
  out.main = std::string(prefix) + "_" + dD.name + "_" + dB.name;
  for (const CtorDecl& c : dD.ctors) {
    std::vector<std::string> per;
    if (cbv) {
      for (std::size_t j = 1; j <= c.args.size() + 1; ++j)
        per.push_back(out.main + "_" + c.name.text + "_" + std::to_string(j));
    } else {
      per.push_back(out.main + "_" + c.name.text);
    }
    out.stages.push_back(std::move(per));
  }
  return out;
}

Type fold_arrows(const std::vector<Type>& doms, Type tail) {
  Type t = std::move(tail);
  for (std::size_t i = doms.size(); i-- > 0;) t = Type::arrow(doms[i], t);
  return t;
}

}  // namespace

GeneratedBundle gen_iter_cbn(const DataTypeDecl& dD, const DataTypeDecl& dB) {
  Type dty = compile_type(dD);
  Type bty = compile_type(dB);
  std::size_t n = dD.ctors.size();
  std::size_t m = dB.ctors.size();
  IterNames names = iter_names("ItCBN", dD, dB, false);

  // f_i : D^i[B/D] -> B, c_j : B^j -> _|_
  std::vector<Type> ftypes, ctypes;
  for (const CtorDecl& c : dD.ctors)
    ftypes.push_back(curried(c.args, bty, bty));
  for (const CtorDecl& c : dB.ctors)
    ctypes.push_back(curried(c.args, bty, Type::bot()));

  GeneratedBundle b{Type::bot(), {}, {}, {}};
  {
    std::vector<Type> doms = ftypes;
    doms.push_back(dty);
    doms.insert(doms.end(), ctypes.begin(), ctypes.end());
    b.cc_type = fold_arrows(doms, Type::bot());
    b.sig_entries.emplace_back(Name(names.main), b.cc_type);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Type> doms = ftypes;
    doms.insert(doms.end(), ctypes.begin(), ctypes.end());
    for (const ArgType& a : dD.ctors[i].args)
      doms.push_back(arg_slot_type(a, dty));
    b.sig_entries.emplace_back(Name(names.stages[i][0]),
                               fold_arrows(doms, Type::bot()));
  }

  std::vector<Var> fs = numbered_vars("f", 1, n);
  std::vector<Var> cs = numbered_vars("c", 1, m);
  {
    // ItCBN.f.x.c -> x.(ItCBN_C1.f.c)...(ItCBN_Cn.f.c)
    std::vector<Var> params = fs;
    params.emplace_back("x");
    params.insert(params.end(), cs.begin(), cs.end());
    Term body = Term::var("x");
    for (std::size_t i = 0; i < n; ++i) {
      Term stage = apply_vars(Term::name(names.stages[i][0]), fs);
      stage = apply_vars(std::move(stage), cs);
      body = Term::app(std::move(body), std::move(stage));
    }
    b.rules.emplace_back(Name(names.main), std::move(params), std::move(body));
    b.provenance.emplace(names.main, Origin::CbnIter);
  }
  for (std::size_t i = 0; i < n; ++i) {
    // ItCBN_Ci.f.c.x -> fi.b(x1)...b(xai).c
    std::size_t ai = dD.ctors[i].args.size();
    std::vector<Var> xs = numbered_vars("x", 1, ai);
    std::vector<Var> params = fs;
    params.insert(params.end(), cs.begin(), cs.end());
    params.insert(params.end(), xs.begin(), xs.end());
    Term body = Term::var(fs[i]);
    for (std::size_t j = 0; j < ai; ++j) {
      Term arg = Term::var(xs[j]);
      if (dD.ctors[i].args[j].is_rec())
        arg = Term::app(apply_vars(Term::name(names.main), fs), std::move(arg));
      body = Term::app(std::move(body), std::move(arg));
    }
    body = apply_vars(std::move(body), cs);
    b.rules.emplace_back(Name(names.stages[i][0]), std::move(params),
                         std::move(body));
    b.provenance.emplace(names.stages[i][0], Origin::CbnIter);
  }
  return b;
}

GeneratedBundle gen_iter_cbv(const DataTypeDecl& dD, const DataTypeDecl& dB) {
  Type dty = compile_type(dD);
  Type bty = compile_type(dB);
  std::size_t n = dD.ctors.size();
  IterNames names = iter_names("ItCBV", dD, dB, true);

  // f_i : D^i[B/D] -> ~~B, c : ~B
  Type not_b = Type::neg(bty);
  std::vector<Type> ftypes;
  for (const CtorDecl& c : dD.ctors)
    ftypes.push_back(curried(c.args, bty, Type::neg(not_b)));

  GeneratedBundle b{Type::bot(), {}, {}, {}};
  {
    std::vector<Type> doms = ftypes;
    doms.push_back(not_b);
    doms.push_back(dty);
    b.cc_type = fold_arrows(doms, Type::bot());
    b.sig_entries.emplace_back(Name(names.main), b.cc_type);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<ArgType>& args = dD.ctors[i].args;
    for (std::size_t j = 1; j <= args.size() + 1; ++j) {
      std::vector<Type> doms = ftypes;
      doms.push_back(not_b);
      for (std::size_t k = j; k <= args.size(); ++k)
        doms.push_back(arg_slot_type(args[k - 1], dty));
      for (std::size_t k = 1; k < j; ++k)
        doms.push_back(arg_slot_type(args[k - 1], bty));
      b.sig_entries.emplace_back(Name(names.stages[i][j - 1]),
                                 fold_arrows(doms, Type::bot()));
    }
  }

  std::vector<Var> fs = numbered_vars("f", 1, n);
  Var c("c");
  {
    // ItCBV.f.c.x -> x.(ItCBV_C1_1.f.c)...(ItCBV_Cn_1.f.c)
    std::vector<Var> params = fs;
    params.push_back(c);
    params.emplace_back("x");
    Term body = Term::var("x");
    for (std::size_t i = 0; i < n; ++i) {
      Term stage = apply_vars(Term::name(names.stages[i][0]), fs);
      stage = Term::app(std::move(stage), Term::var(c));
      body = Term::app(std::move(body), std::move(stage));
    }
    b.rules.emplace_back(Name(names.main), std::move(params), std::move(body));
    b.provenance.emplace(names.main, Origin::CbvIter);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<ArgType>& args = dD.ctors[i].args;
    std::size_t ai = args.size();
    for (std::size_t j = 1; j <= ai; ++j) {
      // ItCBV_Ci_j.f.c.xj...xai.r1...r(j-1) -> (rec or shift)
      std::vector<Var> xs = numbered_vars("x", j, ai);
      std::vector<Var> rs = numbered_vars("r", 1, j - 1);
      std::vector<Var> params = fs;
      params.push_back(c);
      params.insert(params.end(), xs.begin(), xs.end());
      params.insert(params.end(), rs.begin(), rs.end());
      // the next stage, partially applied to everything but slot j
      Term next = apply_vars(Term::name(names.stages[i][j]), fs);
      next = Term::app(std::move(next), Term::var(c));
      for (std::size_t k = 1; k < xs.size(); ++k)
        next = Term::app(std::move(next), Term::var(xs[k]));
      next = apply_vars(std::move(next), rs);
      Term body = [&] {
        if (args[j - 1].is_rec()) {
          Term it = apply_vars(Term::name(names.main), fs);
          it = Term::app(std::move(it), std::move(next));
          return Term::app(std::move(it), Term::var(xs[0]));
        }
        return Term::app(std::move(next), Term::var(xs[0]));
      }();
      b.rules.emplace_back(Name(names.stages[i][j - 1]), std::move(params),
                           std::move(body));
      b.provenance.emplace(names.stages[i][j - 1], Origin::CbvIter);
    }
    {
      // finisher: ItCBV_Ci_(ai+1).f.c.r1...rai -> fi.r1...rai.c
      std::vector<Var> rs = numbered_vars("r", 1, ai);
      std::vector<Var> params = fs;
      params.push_back(c);
      params.insert(params.end(), rs.begin(), rs.end());
      Term body = apply_vars(Term::var(fs[i]), rs);
      body = Term::app(std::move(body), Term::var(c));
      b.rules.emplace_back(Name(names.stages[i][ai]), std::move(params),
                           std::move(body));
      b.provenance.emplace(names.stages[i][ai], Origin::CbvIter);
    }
  }
  return b;
}

namespace {

// Relay rules forward their parameters: the body is a variable-headed spine
// of variables. A fully saturated application of such a rule can be
// replaced by its instantiated body.
bool is_relay(const Rule& r) {
  Spine s = spine(r.body);
  if (!s.head.is_var()) return false;
  for (const Term& a : s.args)
    if (!a.is_var()) return false;
  return true;
}

Term inline_saturated(const Term& t, const std::map<std::string, const Rule*>& relays) {
  Spine s = spine(t);
  std::vector<Term> args;
  args.reserve(s.args.size());
  for (const Term& a : s.args) args.push_back(inline_saturated(a, relays));
  if (auto nm = s.head.as_name()) {
    auto it = relays.find(nm->text);
    if (it != relays.end() && args.size() == it->second->params.size()) {
      Env env;
      for (std::size_t i = 0; i < args.size(); ++i)
        env.emplace(it->second->params[i], args[i]);
      return substitute(it->second->body, env);
    }
  }
  return fold_spine(s.head, args);
}

}  // namespace

GeneratedBundle inline_nullary_stages(const GeneratedBundle& b) {
  std::map<std::string, const Rule*> relays;
  for (const Rule& r : b.rules)
    if (b.provenance.count(r.head.text) && is_relay(r))
      relays.emplace(r.head.text, &r);

  std::vector<Rule> rewritten;
  for (const Rule& r : b.rules)
    rewritten.emplace_back(r.head, r.params, inline_saturated(r.body, relays));

  // keep relays that are still referenced somewhere (partial applications)
  std::set<std::string> referenced;
  for (const Rule& r : rewritten)
    if (!relays.count(r.head.text))
      for (const std::string& n : term_names(r.body)) referenced.insert(n);

  GeneratedBundle out{b.cc_type, {}, {}, {}};
  std::set<std::string> dropped;
  for (const auto& [name, rule] : relays)
    if (!referenced.count(name)) dropped.insert(name);
  for (const Rule& r : rewritten)
    if (!dropped.count(r.head.text)) out.rules.push_back(r);
  for (const auto& [n, t] : b.sig_entries)
    if (!dropped.count(n.text)) out.sig_entries.emplace_back(n, t);
  for (const auto& [n, o] : b.provenance)
    if (!dropped.count(n)) out.provenance.emplace(n, o);
  return out;
}

std::pair<Name, Rule> lambda_lift(const std::vector<Var>& params,
                                  const Term& body, const Program& ambient) {
  std::set<std::string> avoid;
  for (const Rule& r : ambient.rules()) avoid.insert(r.head.text);
  for (const std::string& n : term_names(body)) avoid.insert(n);
  Name fresh = mint_fresh("Lam", 1, avoid).front();
  return {fresh, Rule(fresh, params, body)};
}

DataTypeDecl instantiate(const DataTypeDecl& d, const std::vector<Type>& args,
                         const std::string& label) {
  if (args.size() != d.params.size())
    throw Error("instantiate: '" + d.name + "' takes " +
                std::to_string(d.params.size()) + " parameters");
  DataTypeDecl out{d.name + "_" + label, {}, {}};
  for (const CtorDecl& c : d.ctors) {
    CtorDecl nc{Name(c.name.text + "_" + label), {}};
    for (const ArgType& a : c.args) {
      if (a.is_rec()) {
        nc.args.push_back(ArgType::rec());
      } else {
        Type t = a.ext_type();
        for (std::size_t i = 0; i < args.size(); ++i)
          t = subst_tyvar(t, d.params[i], args[i]);
        nc.args.push_back(ArgType::ext(std::move(t)));
      }
    }
    out.ctors.push_back(std::move(nc));
  }
  return out;
}

}  // namespace cc
