#ifndef CCWB_TEST_HELPERS_HPP
#define CCWB_TEST_HELPERS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cc/eval.hpp"
#include "cc/prelude.hpp"
#include "cc/printer.hpp"
#include "cc/surface.hpp"
#include "cc/term.hpp"
#include "cc/type.hpp"
#include "cc/typecheck.hpp"

namespace ccwb_test {

inline cc::Term term(const std::string& text) {
  auto r = cc::parse_term(text);
  if (!r) throw cc::Error("test term does not parse: " + text);
  return r.value();
}

inline cc::Type type(const std::string& text) {
  auto r = cc::parse_type(text);
  if (!r) throw cc::Error("test type does not parse: " + text);
  return r.value();
}

// Independent oracle for type equality: co-unfold mu-types with a budget
// of `fuel` unfold steps along each path, compare structurally, and treat
// any comparison that still needs unfolding at the horizon as equal. Exact
// on pools whose types are discriminated within `fuel` unfoldings.
inline bool oracle_type_eq(const cc::Type& a, const cc::Type& b,
                           std::size_t fuel) {
  if (a.is_mu() || b.is_mu()) {
    if (fuel == 0) return true;
    if (a.is_mu()) return oracle_type_eq(cc::unfold_mu(a), b, fuel - 1);
    return oracle_type_eq(a, cc::unfold_mu(b), fuel - 1);
  }
  if (a.is_bot() && b.is_bot()) return true;
  if (a.is_tyvar() && b.is_tyvar()) return *a.tyvar_name() == *b.tyvar_name();
  if (a.is_arrow() && b.is_arrow())
    return oracle_type_eq(*a.dom(), *b.dom(), fuel) &&
           oracle_type_eq(*a.cod(), *b.cod(), fuel);
  return false;
}

// Random well-typed closed term of the wanted type: pick a declared name
// whose type, after peeling some argument slots, equals `want`, then
// generate the arguments recursively. Depth 0 restricts the choice to
// bare names.
inline std::optional<cc::Term> gen_typed_term(const cc::Signature& sig,
                                              const cc::Type& want,
                                              std::mt19937_64& rng,
                                              int depth) {
  struct Candidate {
    cc::Name name;
    std::vector<cc::Type> slots;
  };
  std::vector<Candidate> candidates;
  for (const auto& [name, ty] : sig.entries()) {
    cc::Type remainder = ty;
    std::vector<cc::Type> slots;
    for (int peeled = 0; peeled <= 6; ++peeled) {
      if (cc::type_eq(remainder, want) && (depth > 0 || slots.empty()))
        candidates.push_back({name, slots});
      auto arrow = cc::head_arrow(remainder);
      if (!arrow) break;
      slots.push_back(arrow->first);
      remainder = arrow->second;
    }
  }
  if (candidates.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Candidate& c =
        candidates[std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng)];
    cc::Term t = cc::Term::name(c.name);
    bool ok = true;
    for (const cc::Type& slot : c.slots) {
      auto arg = gen_typed_term(sig, slot, rng, depth - 1);
      if (!arg) {
        ok = false;
        break;
      }
      t = cc::Term::app(t, *arg);
    }
    if (ok) return t;
  }
  return std::nullopt;
}

// Prelude signature extended with typed but undefined atoms, so that term
// generation bottoms out and normal forms land on Undefined heads.
inline cc::Signature sig_with_atoms(const cc::Prelude& pre) {
  cc::Signature sig = pre.signature;
  const cc::Type& nat = *pre.find_type("Nat");
  const cc::Type& list = *pre.find_type("List");
  sig.add(cc::Name("K^bot"), cc::Type::bot());
  sig.add(cc::Name("K^nat"), nat);
  sig.add(cc::Name("K^natk"), cc::Type::neg(nat));
  sig.add(cc::Name("K^list"), list);
  return sig;
}

// A small random closed term over a fixed alphabet, for syntactic
// properties (no typing intended).
inline cc::Term gen_any_term(std::mt19937_64& rng, int depth) {
  static const char* names[] = {"Zero", "Succ", "Cons", "K", "M"};
  if (depth == 0 || rng() % 3 == 0)
    return cc::Term::name(names[rng() % 5]);
  return cc::Term::app(gen_any_term(rng, depth - 1),
                       gen_any_term(rng, depth - 1));
}

}  // namespace ccwb_test

#endif
