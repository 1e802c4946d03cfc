#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusemi/audit.hpp"
#include "cusemi/augmented.hpp"
#include "cusemi/model.hpp"

namespace cusemi {

/// Generator-weight functional. Linearity on the ray coordinates is forced by
/// the representation; the audits target what it does not force: dense
/// finiteness and the behaviour of the extension to signed classes.
struct Functional {
  ScalarVec weights;
  bool densely_finite = true;
  std::string name = "lambda";
};

/// Weighted sum of the carrier's ray coordinates, infinity-absorbing, with the
/// measure convention 0 * inf = 0. Requires x >= 0; signed elements go through
/// extend. Throws when the carrier exposes no coordinates, the arity differs,
/// or x is not positive.
ExtScalar evaluate(const Functional& f, const ModelPtr& m, const Element& x);

/// Value on a positive class: the weighted sum of its class vector.
ExtScalar evaluate(const Functional& f, const AugmentedModel& aug, const FormalDifference& d);

struct ExtendResult {
  Verdict3 verdict;  // yes: value holds; no: two absorbers disagreed; open: no absorber
  ExtScalar value;
};

/// Extension to signed classes: lambda(x) = lambda(x+z) - lambda(z) for a
/// positive absorber z of finite value that is way below something. The value
/// is checked against a second independent absorber and, for positive x,
/// against direct evaluation.
ExtendResult extend(const Functional& f, const AugmentedModel& aug, const FormalDifference& x);

/// The same recipe on a carrier that stores signed elements directly, using
/// the model's closed-form absorber.
ExtendResult extend(const Functional& f, const ModelPtr& m, const Element& x);

/// Pairings of one element against each functional of a ray set. Throws when
/// an extension is undefined.
ScalarVec hat_vector(const std::vector<Functional>& rays, const AugmentedModel& aug,
                     const FormalDifference& d);
ScalarVec hat_vector(const std::vector<Functional>& rays, const ModelPtr& m, const Element& x);

struct FactorResult {
  Verdict3 verdict;                    // no carries the witness pair of base elements
  std::optional<Functional> factored;  // weights on the class coordinates, set when yes
};

/// Checks that a base functional, finite on the full element z, descends along
/// q to the classes: whenever the rank-stripped classes of two positive window
/// elements compare, so must the values. On success returns the descended
/// functional; a violation reports the offending pair.
FactorResult factor_check(const Functional& f, const AugmentedModel& aug, const Element& full_z,
                          const Window& w);

/// extend of the functional descended by factor_check. Throws unless factoring
/// succeeded.
ExtendResult pairing(const FactorResult& fr, const AugmentedModel& aug,
                     const FormalDifference& x);

/// Property audit of one functional on the window: dense finiteness against
/// the declared flag, absorber independence, and additivity, monotonicity and
/// chain-sup preservation of the extension.
AuditReport audit_functional(const Functional& f, const AugmentedModel& aug, const Window& w);

/// How a functional sequence continues past its explicit terms.
enum class TailRule {
  Constant,  // the last term repeats
  Limit,     // the weights converge to the designated limit functional
  Periodic,  // the last `period` terms cycle forever
};

struct FunctionalSequence {
  std::vector<Functional> terms;
  TailRule tail = TailRule::Constant;
  std::optional<Functional> limit;  // required for Limit tails
  int period = 1;                   // cycle length for Periodic tails
  std::string name = "sequence";
};

/// Convergence in the functional topology: limsup f_i(x) <= f(y) <= liminf
/// f_i(y) over window pairs 0 <= x way-below y. The tail rule makes the outer
/// limits exact rather than sampled.
AuditReport check_convergence(const FunctionalSequence& seq, const Functional& cand,
                              const ModelPtr& m, const Window& w);

/// Class variant: the same inequality over positive window classes via extend,
/// plus lower semicontinuity of the pairing along the sequence on every window
/// class.
AuditReport check_convergence(const FunctionalSequence& seq, const Functional& cand,
                              const AugmentedModel& aug, const Window& w);

bool reevaluate(const Functional& f, const AugmentedModel& aug, const PredicateResult& r);
bool reevaluate(const Functional& f, const AugmentedModel& aug, const FactorResult& fr);
bool reevaluate(const FunctionalSequence& seq, const Functional& cand, const ModelPtr& m,
                const PredicateResult& r);
bool reevaluate(const FunctionalSequence& seq, const Functional& cand, const AugmentedModel& aug,
                const PredicateResult& r);

}  // namespace cusemi
