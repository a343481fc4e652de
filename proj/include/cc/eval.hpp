#ifndef CC_EVAL_HPP
#define CC_EVAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cc/term.hpp"

namespace cc {

// Outcome of one top-level step. Reduction happens only when the whole
// term is Complete; it is never applied inside subterms.
struct StepResult {
  std::optional<Term> reduced;          // set iff a rule fired
  Classification normal_form_class;     // meaningful iff !reduced

  bool stepped() const { return reduced.has_value(); }
};

struct EvalOutcome {
  Term last;                 // normal form, or the frontier on fuel exhaustion
  Classification cls;        // classification of last (never Complete when terminated)
  std::size_t steps;
  bool fuel_exhausted;

  bool terminated() const { return !fuel_exhausted; }
};

// Successive terms, first = input, each successor the unique reduct of its
// predecessor.
using Trace = std::vector<Term>;

enum class Equality { Equal, NotEqual, Unknown };
enum class Equivalence { Equivalent, NotEquivalent, Unknown };

const char* to_string(Equality e);
const char* to_string(Equivalence e);

// Fire the unique rule for head(t) when t is Complete, else report the
// normal-form classification. Precondition: t closed.
StepResult step(const Program& p, const Term& t);

// Iterate step at most fuel times. Determinism makes the result the unique
// normal form whenever one is reached; fuel exhaustion signals possible
// divergence, never asserted divergence.
EvalOutcome evaluate(const Program& p, const Term& t, std::size_t fuel);

Trace trace(const Program& p, const Term& t, std::size_t fuel);

// Joinability test =_P, decided on a deterministic system by intersecting
// the two forward reduction sequences (fuel-bounded on each side).
// Equal     - the visited sets intersect;
// NotEqual  - both sides reached normal forms and stayed disjoint;
// Unknown   - fuel ran out before either verdict.
Equality eq_p(const Program& p, const Term& a, const Term& b, std::size_t fuel);

// Mint fresh names "<stem>#0", "<stem>#1", ... skipping entries of avoid.
std::vector<Name> mint_fresh(const std::string& stem, std::size_t count,
                             const std::set<std::string>& avoid);

// Observational-equivalence test via fresh continuations: a.c1.....ck and
// b.c1.....ck are compared with eq_p; when both sides park at normal forms
// with the same head and length, the payloads are compared recursively
// (congruence). Equivalent is sound for obs-equivalence; NotEquivalent only
// reports that this test failed to witness =_P.
// Throws ArityMismatchError when the classify-based arities of a and b are
// undefined, differ, or differ from k.
Equivalence obs_equiv_test(const Program& p, const Term& a, const Term& b,
                           std::size_t k, std::size_t fuel);

}  // namespace cc

#endif
