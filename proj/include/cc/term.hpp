#ifndef CC_TERM_HPP
#define CC_TERM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cc/support.hpp"

namespace cc {

// A name is a global label: uppercase first character, then alphanumerics
// or one of ' ^ _ { } #. The extended characters admit generated names
// (ItCBV_Nat_Nat_Succ_2, AddCBV', C#0) that still round-trip through the
// surface syntax.
struct Name {
  std::string text;

  explicit Name(std::string t);
  static bool valid(const std::string& t);

  friend bool operator==(const Name& a, const Name& b) { return a.text == b.text; }
  friend bool operator!=(const Name& a, const Name& b) { return !(a == b); }
  friend bool operator<(const Name& a, const Name& b) { return a.text < b.text; }
};

// A variable occurs only in rule bodies: lowercase first character.
struct Var {
  std::string text;

  explicit Var(std::string t);
  static bool valid(const std::string& t);

  friend bool operator==(const Var& a, const Var& b) { return a.text == b.text; }
  friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }
  friend bool operator<(const Var& a, const Var& b) { return a.text < b.text; }
};

// Terms are binary application trees over names and variables. Values are
// immutable and structurally shared; a Term is a cheap handle. The dot of
// the surface syntax left-associates, so n.t1.t2 is App(App(n,t1),t2).
class Term {
public:
  static Term name(Name n);
  static Term name(const std::string& n) { return name(Name(n)); }
  static Term var(Var v);
  static Term var(const std::string& v) { return var(Var(v)); }
  static Term app(Term fun, Term arg);

  bool is_name() const;
  bool is_var() const;
  bool is_app() const;

  // Leaf accessors return nullptr on the wrong alternative.
  const Name* as_name() const;
  const Var* as_var() const;
  const Term* fun() const;
  const Term* arg() const;

  // A term is closed iff it contains no variables; only closed terms are
  // evaluated.
  bool closed() const;

  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Head plus arguments, left to right. Reassembling with fold_spine yields
// the original term.
struct Spine {
  Term head;  // always a name or variable leaf
  std::vector<Term> args;
};

Term head(const Term& t);
std::size_t length(const Term& t);
Spine spine(const Term& t);
Term fold_spine(Term head, const std::vector<Term>& args);

// All names occurring anywhere in t.
std::set<std::string> term_names(const Term& t);

using Env = std::map<Var, Term>;

// Simultaneous replacement of variables; CC terms bind nothing, so no
// capture is possible. Throws UnboundVariableError if a variable of body
// has no image.
Term substitute(const Term& body, const Env& env);

// One rule n.x1.....xk -> body: distinct parameters, body over them.
struct Rule {
  Name head;
  std::vector<Var> params;
  Term body;

  Rule(Name head, std::vector<Var> params, Term body);

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.params == b.params && a.body == b.body;
  }
};

// A finite map from names to rules; each name defined at most once.
// Rules keep their insertion order so programs print stably.
class Program {
public:
  Program() = default;

  bool defines(const Name& n) const { return index_.count(n.text) != 0; }
  const Rule* find(const Name& n) const;
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

  // Throws DuplicateDefinitionError if the head is already defined.
  void add(Rule r);

private:
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Functional extension; errors as Program::add.
Program add_rule(const Program& p, Rule r);

enum class Classification { Undefined, Complete, Incomplete, Invalid };

const char* to_string(Classification c);

// Number of parameters of n's rule; absent when n is not defined.
std::optional<std::size_t> arity_of_name(const Program& p, const Name& n);

// arity(t) = arity(head(t)) - length(t): zero Complete, positive
// Incomplete, negative Invalid, head not defined Undefined.
Classification classify(const Program& p, const Term& t);

}  // namespace cc

#endif
