#include "cc/surface.hpp"

#include <cctype>

#include "cc/printer.hpp"

namespace cc {

std::string format(const Diagnostic& d) {
  std::string out = d.severity == Diagnostic::Severity::Error ? "error" : "warning";
  out += " at " + std::to_string(d.span.line) + ":" + std::to_string(d.span.col);
  out += ": " + d.message;
  return out;
}

namespace {

enum class Tok {
  UIdent,   // uppercase-initial identifier
  LIdent,   // lowercase-initial identifier
  Dot,
  Arrow,
  Equals,
  Pipe,
  LParen,
  RParen,
  Comma,
  Colon,
  Tilde,
  Bot,      // _|_
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  Span here{1, 1};
  std::vector<Diagnostic> errors;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++here.line;
        here.col = 1;
      } else {
        ++here.col;
      }
    }
  }

  void skip_trivia() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        while (pos < src.size() && src[pos] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  static bool upper_tail(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' ||
           c == '^' || c == '_' || c == '{' || c == '}' || c == '#';
  }

  static bool lower_tail(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '_';
  }

  Token next() {
    skip_trivia();
    Span at = here;
    if (pos >= src.size()) return {Tok::End, "", at};
    char c = src[pos];
    if (src.compare(pos, 3, "_|_") == 0) {
      advance(3);
      return {Tok::Bot, "_|_", at};
    }
    if (src.compare(pos, 2, "->") == 0) {
      advance(2);
      return {Tok::Arrow, "->", at};
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      advance(1);
      while (pos < src.size() && upper_tail(src[pos])) advance(1);
      return {Tok::UIdent, src.substr(start, pos - start), at};
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      advance(1);
      while (pos < src.size() && lower_tail(src[pos])) advance(1);
      return {Tok::LIdent, src.substr(start, pos - start), at};
    }
    switch (c) {
      case '.': advance(1); return {Tok::Dot, ".", at};
      case '=': advance(1); return {Tok::Equals, "=", at};
      case '|': advance(1); return {Tok::Pipe, "|", at};
      case '(': advance(1); return {Tok::LParen, "(", at};
      case ')': advance(1); return {Tok::RParen, ")", at};
      case ',': advance(1); return {Tok::Comma, ",", at};
      case ':': advance(1); return {Tok::Colon, ":", at};
      case '~': advance(1); return {Tok::Tilde, "~", at};
      default:
        errors.push_back({Diagnostic::Severity::Error,
                          std::string("unexpected character '") + c + "'", at});
        advance(1);
        return next();
    }
  }
};

std::vector<Token> tokenize(const std::string& text,
                            std::vector<Diagnostic>& errors) {
  Lexer lex(text);
  std::vector<Token> out;
  for (;;) {
    Token t = lex.next();
    out.push_back(t);
    if (t.kind == Tok::End) break;
  }
  errors.insert(errors.end(), lex.errors.begin(), lex.errors.end());
  return out;
}

// Thrown internally to abort the current item; converted to diagnostics.
struct ParseAbort {};

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;
  std::vector<Diagnostic> diags;

  const Token& peek() const { return toks[at]; }
  const Token& get() { return toks[at].kind == Tok::End ? toks[at] : toks[at++]; }

  [[noreturn]] void fail(const std::string& msg) {
    diags.push_back({Diagnostic::Severity::Error, msg, peek().span});
    throw ParseAbort{};
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return toks[at++];
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at;
    return true;
  }

  // term := factor ("." factor)*
  Term parse_term_expr() {
    Term t = parse_factor();
    while (accept(Tok::Dot)) t = Term::app(t, parse_factor());
    return t;
  }

  Term parse_factor() {
    const Token& tok = peek();
    if (tok.kind == Tok::UIdent) {
      ++at;
      return Term::name(tok.text);
    }
    if (tok.kind == Tok::LIdent) {
      ++at;
      return Term::var(tok.text);
    }
    if (accept(Tok::LParen)) {
      Term t = parse_term_expr();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a name, variable, or '('");
  }

  // type := prefix ("->" type)?
  Type parse_type_expr() {
    Type lhs = parse_type_prefix();
    if (accept(Tok::Arrow)) return Type::arrow(lhs, parse_type_expr());
    return lhs;
  }

  Type parse_type_prefix() {
    if (accept(Tok::Tilde)) return Type::neg(parse_type_prefix());
    return parse_type_atom();
  }

  Type parse_type_atom() {
    const Token& tok = peek();
    if (tok.kind == Tok::Bot) {
      ++at;
      return Type::bot();
    }
    if (tok.kind == Tok::LIdent && tok.text == "mu") {
      ++at;
      Token binder = expect(Tok::UIdent, "a type variable after 'mu'");
      expect(Tok::Dot, "'.'");
      return Type::mu(binder.text, parse_type_expr());
    }
    if (tok.kind == Tok::UIdent) {
      ++at;
      if (peek().kind == Tok::LParen)
        fail("type application is only valid for the recursive occurrence "
             "inside its own data declaration");
      return Type::tyvar(tok.text);
    }
    if (accept(Tok::LParen)) {
      Type t = parse_type_expr();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a type");
  }

  // The recursive occurrence is the declared name, optionally applied to
  // exactly its own parameters.
  ArgType parse_argtype(const std::string& decl_name,
                        const std::vector<std::string>& params) {
    if (peek().kind == Tok::UIdent && peek().text == decl_name) {
      std::size_t save = at;
      ++at;
      if (params.empty()) {
        if (peek().kind == Tok::LParen)
          fail("'" + decl_name + "' takes no parameters");
        return ArgType::rec();
      }
      expect(Tok::LParen, "'('");
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) expect(Tok::Comma, "','");
        Token p = expect(Tok::UIdent, "a type parameter");
        if (p.text != params[i]) {
          at = save;
          fail("recursive occurrence of '" + decl_name +
               "' must be applied to its own parameters");
        }
      }
      expect(Tok::RParen, "')'");
      return ArgType::rec();
    }
    return ArgType::ext(parse_type_expr());
  }

  DataItem parse_data() {
    Span span = peek().span;
    ++at;  // data
    Token name = expect(Tok::UIdent, "a data type name");
    std::vector<std::string> params;
    if (accept(Tok::LParen)) {
      do {
        params.push_back(expect(Tok::UIdent, "a type parameter").text);
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    expect(Tok::Equals, "'='");
    std::vector<CtorDecl> ctors;
    do {
      Token cname = expect(Tok::UIdent, "a constructor name");
      std::vector<ArgType> args;
      if (accept(Tok::LParen)) {
        do {
          args.push_back(parse_argtype(name.text, params));
        } while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
      }
      ctors.push_back(CtorDecl{Name(cname.text), std::move(args)});
    } while (accept(Tok::Pipe));
    return DataItem{DataTypeDecl{name.text, std::move(params), std::move(ctors)},
                    span};
  }

  NameItem parse_name_item() {
    Span span = peek().span;
    ++at;  // name
    Token name = expect(Tok::UIdent, "a name");
    expect(Tok::Colon, "':'");
    Type ty = parse_type_expr();
    return NameItem{Name(name.text), std::move(ty), span};
  }

  RuleItem parse_rule_item() {
    Span span = peek().span;
    ++at;  // rule
    Token head = expect(Tok::UIdent, "a rule head name");
    std::vector<Var> params;
    while (accept(Tok::Dot))
      params.emplace_back(expect(Tok::LIdent, "a parameter variable").text);
    expect(Tok::Arrow, "'->'");
    Term body = parse_term_expr();
    try {
      return RuleItem{Rule(Name(head.text), std::move(params), std::move(body)),
                      span};
    } catch (const Error& e) {
      diags.push_back({Diagnostic::Severity::Error, e.what(), span});
      throw ParseAbort{};
    }
  }

  UseItem parse_use() {
    Span span = peek().span;
    ++at;  // use
    if (peek().kind != Tok::LIdent && peek().kind != Tok::UIdent)
      fail("expected the name of a library after 'use'");
    return UseItem{get().text, span};
  }

  void skip_to_next_item() {
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::LIdent &&
          (peek().text == "data" || peek().text == "name" ||
           peek().text == "rule" || peek().text == "use"))
        return;
      ++at;
    }
  }

  SourceFile parse_file() {
    SourceFile f;
    while (peek().kind != Tok::End) {
      try {
        if (peek().kind != Tok::LIdent)
          fail("expected an item ('data', 'name', 'rule', or 'use')");
        const std::string& kw = peek().text;
        if (kw == "data")
          f.items.emplace_back(parse_data());
        else if (kw == "name")
          f.items.emplace_back(parse_name_item());
        else if (kw == "rule")
          f.items.emplace_back(parse_rule_item());
        else if (kw == "use")
          f.items.emplace_back(parse_use());
        else
          fail("unknown item '" + kw + "'");
      } catch (const ParseAbort&) {
        skip_to_next_item();
      }
    }
    return f;
  }
};

}  // namespace

Expected<SourceFile, std::vector<Diagnostic>> parse(const std::string& text) {
  std::vector<Diagnostic> diags;
  std::vector<Token> toks = tokenize(text, diags);
  Parser p{std::move(toks), 0, {}};
  SourceFile f = p.parse_file();
  diags.insert(diags.end(), p.diags.begin(), p.diags.end());
  if (!diags.empty()) return diags;
  return f;
}

namespace {

template <typename T, typename Fn>
Expected<T, std::vector<Diagnostic>> parse_fragment(const std::string& text,
                                                    Fn&& fn) {
  std::vector<Diagnostic> diags;
  std::vector<Token> toks = tokenize(text, diags);
  Parser p{std::move(toks), 0, {}};
  try {
    T out = fn(p);
    if (p.peek().kind != Tok::End)
      p.diags.push_back({Diagnostic::Severity::Error,
                         "trailing input after expression", p.peek().span});
    diags.insert(diags.end(), p.diags.begin(), p.diags.end());
    if (!diags.empty()) return diags;
    return out;
  } catch (const ParseAbort&) {
    diags.insert(diags.end(), p.diags.begin(), p.diags.end());
    return diags;
  }
}

}  // namespace

Expected<Term, std::vector<Diagnostic>> parse_term(const std::string& text) {
  return parse_fragment<Term>(text,
                              [](Parser& p) { return p.parse_term_expr(); });
}

Expected<Type, std::vector<Diagnostic>> parse_type(const std::string& text) {
  return parse_fragment<Type>(text,
                              [](Parser& p) { return p.parse_type_expr(); });
}

std::string to_text(const SourceFile& f) {
  std::string out;
  for (const Item& item : f.items) {
    if (auto d = std::get_if<DataItem>(&item)) {
      out += print(d->decl, {});
    } else if (auto n = std::get_if<NameItem>(&item)) {
      out += print(n->name, n->type);
    } else if (auto r = std::get_if<RuleItem>(&item)) {
      out += print(r->rule);
    } else if (auto u = std::get_if<UseItem>(&item)) {
      out += "use " + u->what;
    }
    out += '\n';
  }
  return out;
}

bool operator==(const Item& a, const Item& b) {
  if (a.index() != b.index()) return false;
  if (auto d = std::get_if<DataItem>(&a))
    return d->decl == std::get<DataItem>(b).decl;
  if (auto n = std::get_if<NameItem>(&a)) {
    const NameItem& other = std::get<NameItem>(b);
    return n->name == other.name && n->type == other.type;
  }
  if (auto r = std::get_if<RuleItem>(&a))
    return r->rule == std::get<RuleItem>(b).rule;
  return std::get<UseItem>(a).what == std::get<UseItem>(b).what;
}

}  // namespace cc
