#include "cc/eval.hpp"

#include <unordered_set>

namespace cc {

const char* to_string(Equality e) {
  switch (e) {
    case Equality::Equal: return "Equal";
    case Equality::NotEqual: return "NotEqual";
    case Equality::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "Equivalent";
    case Equivalence::NotEquivalent: return "NotEquivalent";
    case Equivalence::Unknown: return "Unknown";
  }
  return "?";
}

StepResult step(const Program& p, const Term& t) {
  Classification c = classify(p, t);
  if (c != Classification::Complete) return StepResult{std::nullopt, c};
  Spine s = spine(t);
  const Rule* r = p.find(*s.head.as_name());
  Env env;
  for (std::size_t i = 0; i < r->params.size(); ++i)
    env.emplace(r->params[i], s.args[i]);
  return StepResult{substitute(r->body, env), Classification::Complete};
}

EvalOutcome evaluate(const Program& p, const Term& t, std::size_t fuel) {
  Term cur = t;
  for (std::size_t i = 0; i < fuel; ++i) {
    StepResult r = step(p, cur);
    if (!r.stepped()) return EvalOutcome{cur, r.normal_form_class, i, false};
    cur = *r.reduced;
  }
  StepResult r = step(p, cur);
  if (!r.stepped()) return EvalOutcome{cur, r.normal_form_class, fuel, false};
  return EvalOutcome{cur, Classification::Complete, fuel, true};
}

Trace trace(const Program& p, const Term& t, std::size_t fuel) {
  Trace out{t};
  Term cur = t;
  for (std::size_t i = 0; i < fuel; ++i) {
    StepResult r = step(p, cur);
    if (!r.stepped()) break;
    cur = *r.reduced;
    out.push_back(cur);
  }
  return out;
}

namespace {

struct Run {
  Trace visited;
  bool terminated;
};

Run run(const Program& p, const Term& t, std::size_t fuel) {
  Trace tr = trace(p, t, fuel);
  bool done = !step(p, tr.back()).stepped();
  return Run{std::move(tr), done};
}

Equality eq_runs(const Run& ra, const Run& rb) {
  std::unordered_set<Term, TermHash> seen(ra.visited.begin(), ra.visited.end());
  for (const Term& t : rb.visited)
    if (seen.count(t)) return Equality::Equal;
  if (ra.terminated && rb.terminated) return Equality::NotEqual;
  return Equality::Unknown;
}

}  // namespace

Equality eq_p(const Program& p, const Term& a, const Term& b, std::size_t fuel) {
  return eq_runs(run(p, a, fuel), run(p, b, fuel));
}

std::vector<Name> mint_fresh(const std::string& stem, std::size_t count,
                             const std::set<std::string>& avoid) {
  std::vector<Name> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    std::string candidate = stem + "#" + std::to_string(k);
    if (!avoid.count(candidate)) out.emplace_back(candidate);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxObsDepth = 256;

std::set<std::string> avoid_set(const Program& p, const Term& a, const Term& b) {
  std::set<std::string> avoid;
  for (const Rule& r : p.rules()) avoid.insert(r.head.text);
  for (const std::string& n : term_names(a)) avoid.insert(n);
  for (const std::string& n : term_names(b)) avoid.insert(n);
  return avoid;
}

std::optional<std::size_t> term_arity(const Program& p, const Term& t) {
  const Name* n = head(t).as_name();
  if (!n) return std::nullopt;
  auto a = arity_of_name(p, *n);
  if (!a) return std::nullopt;
  std::size_t len = length(t);
  if (*a < len) return std::nullopt;
  return *a - len;
}

Equivalence obs_pair(const Program& p, const Term& a, const Term& b,
                     std::size_t fuel, std::size_t depth);

// Compare a.c1...ck against b.c1...ck for freshly minted c1..ck.
Equivalence obs_applied(const Program& p, const Term& a, const Term& b,
                        std::size_t k, std::size_t fuel, std::size_t depth) {
  std::vector<Name> fresh = mint_fresh("C", k, avoid_set(p, a, b));
  Term ta = a, tb = b;
  for (const Name& c : fresh) {
    ta = Term::app(ta, Term::name(c));
    tb = Term::app(tb, Term::name(c));
  }
  Run ra = run(p, ta, fuel);
  Run rb = run(p, tb, fuel);
  Equality eq = eq_runs(ra, rb);
  if (eq == Equality::Equal) return Equivalence::Equivalent;
  if (eq == Equality::Unknown) return Equivalence::Unknown;
  // Both sides parked. If they parked on the same head with equal length,
  // the terms are equivalent whenever the payloads are pairwise equivalent
  // (obs-equivalence is a congruence).
  return obs_pair(p, ra.visited.back(), rb.visited.back(), fuel, depth);
}

Equivalence obs_pair(const Program& p, const Term& a, const Term& b,
                     std::size_t fuel, std::size_t depth) {
  if (a == b) return Equivalence::Equivalent;
  if (depth == 0) return Equivalence::Unknown;
  auto ka = term_arity(p, a), kb = term_arity(p, b);
  if (ka && kb && *ka == *kb)
    return obs_applied(p, a, b, *ka, fuel, depth - 1);
  Spine sa = spine(a), sb = spine(b);
  if (!(sa.head == sb.head) || sa.args.size() != sb.args.size())
    return Equivalence::NotEquivalent;
  bool unknown = false;
  for (std::size_t i = 0; i < sa.args.size(); ++i) {
    Equivalence e = obs_pair(p, sa.args[i], sb.args[i], fuel, depth - 1);
    if (e == Equivalence::NotEquivalent) return Equivalence::NotEquivalent;
    if (e == Equivalence::Unknown) unknown = true;
  }
  return unknown ? Equivalence::Unknown : Equivalence::Equivalent;
}

}  // namespace

Equivalence obs_equiv_test(const Program& p, const Term& a, const Term& b,
                           std::size_t k, std::size_t fuel) {
  auto ka = term_arity(p, a);
  auto kb = term_arity(p, b);
  if (!ka || !kb)
    throw ArityMismatchError("obs_equiv_test: a term has no arity in P");
  if (*ka != *kb || *ka != k)
    throw ArityMismatchError(
        "obs_equiv_test: arities disagree (" + std::to_string(*ka) + " vs " +
        std::to_string(*kb) + ", requested " + std::to_string(k) + ")");
  return obs_applied(p, a, b, k, fuel, kMaxObsDepth);
}

}  // namespace cc
