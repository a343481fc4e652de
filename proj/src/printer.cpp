#include "cc/printer.hpp"

namespace cc {

namespace {

void print_term(const Term& t, std::string& out) {
  if (auto n = t.as_name()) {
    out += n->text;
    return;
  }
  if (auto v = t.as_var()) {
    out += v->text;
    return;
  }
  print_term(*t.fun(), out);
  out += '.';
  const Term& a = *t.arg();
  if (a.is_app()) {
    out += '(';
    print_term(a, out);
    out += ')';
  } else {
    print_term(a, out);
  }
}

void print_type(const Type& t, std::string& out) {
  if (t.is_bot()) {
    out += "_|_";
    return;
  }
  if (auto v = t.tyvar_name()) {
    out += *v;
    return;
  }
  if (t.is_mu()) {
    out += "mu ";
    out += *t.mu_binder();
    out += " . ";
    print_type(*t.mu_body(), out);
    return;
  }
  const Type& d = *t.dom();
  if (d.is_arrow() || d.is_mu()) {
    out += '(';
    print_type(d, out);
    out += ')';
  } else {
    print_type(d, out);
  }
  out += " -> ";
  print_type(*t.cod(), out);
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string print(const Type& t) {
  std::string out;
  print_type(t, out);
  return out;
}

std::string print(const Rule& r) {
  std::string out = "rule " + r.head.text;
  for (const Var& v : r.params) {
    out += '.';
    out += v.text;
  }
  out += " -> ";
  out += print(r.body);
  return out;
}

std::string print(const Name& n, const Type& t) {
  return "name " + n.text + " : " + print(t);
}

std::string print(const Signature& sig) {
  std::string out;
  for (const auto& [n, t] : sig.entries()) {
    out += print(n, t);
    out += '\n';
  }
  return out;
}

std::string print(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules()) {
    out += print(r);
    out += '\n';
  }
  return out;
}

namespace {

const std::string* abbrev_for(const Type& t, const TypeAbbrevs& abbrevs) {
  for (const auto& [name, ty] : abbrevs)
    if (t == ty) return &name;
  return nullptr;
}

void print_type_abbrev(const Type& t, const TypeAbbrevs& abbrevs,
                       std::string& out) {
  if (auto a = abbrev_for(t, abbrevs)) {
    out += *a;
    return;
  }
  if (t.is_bot()) {
    out += "_|_";
    return;
  }
  if (auto v = t.tyvar_name()) {
    out += *v;
    return;
  }
  if (t.is_mu()) {
    out += "mu ";
    out += *t.mu_binder();
    out += " . ";
    print_type_abbrev(*t.mu_body(), abbrevs, out);
    return;
  }
  const Type& d = *t.dom();
  bool parens = (d.is_arrow() || d.is_mu()) && !abbrev_for(d, abbrevs);
  if (parens) out += '(';
  print_type_abbrev(d, abbrevs, out);
  if (parens) out += ')';
  out += " -> ";
  print_type_abbrev(*t.cod(), abbrevs, out);
}

}  // namespace

std::string print_abbrev(const Type& t, const TypeAbbrevs& abbrevs) {
  std::string out;
  print_type_abbrev(t, abbrevs, out);
  return out;
}

std::string print(const DataTypeDecl& d, const TypeAbbrevs& abbrevs) {
  std::string out = "data " + d.name;
  if (!d.params.empty()) {
    out += '(';
    for (std::size_t i = 0; i < d.params.size(); ++i) {
      if (i) out += ", ";
      out += d.params[i];
    }
    out += ')';
  }
  out += " = ";
  for (std::size_t i = 0; i < d.ctors.size(); ++i) {
    if (i) out += " | ";
    const CtorDecl& c = d.ctors[i];
    out += c.name.text;
    if (!c.args.empty()) {
      out += '(';
      for (std::size_t j = 0; j < c.args.size(); ++j) {
        if (j) out += ", ";
        if (c.args[j].is_rec()) {
          out += d.name;
          if (!d.params.empty()) {
            out += '(';
            for (std::size_t k = 0; k < d.params.size(); ++k) {
              if (k) out += ", ";
              out += d.params[k];
            }
            out += ')';
          }
        } else {
          out += print_abbrev(c.args[j].ext_type(), abbrevs);
        }
      }
      out += ')';
    }
  }
  return out;
}

}  // namespace cc
