#pragma once

#include <string>
#include <vector>

#include "cusemi/cumap.hpp"
#include "cusemi/model.hpp"

namespace cusemi {

/// Three-valued verdict plus the marker for predicates a model declares it
/// cannot satisfy at finite scale (reported, not asserted).
enum class Verdict { Pass, Fail, ExpectedFail, Unknown };

std::string verdict_name(Verdict v);

/// Outcome of one audited predicate. Fail verdicts carry enough of the
/// violating configuration to be re-run: the elements, the predicate-specific
/// integers (multipliers, chain indices, case tags) and a human-readable
/// transcript of the tuple.
struct PredicateResult {
  std::string predicate;
  Verdict verdict = Verdict::Pass;
  long long samples = 0;
  std::string witness;
  std::vector<Element> witness_elems;
  std::vector<long long> aux;
  std::string note;
};

struct AuditReport {
  std::string subject;
  Window window;
  std::vector<PredicateResult> results;

  const PredicateResult* find(const std::string& predicate) const;
  bool any(Verdict v) const;
  /// 0 when everything passed (expected failures count as matched),
  /// 1 on a failure, 2 when the only blemishes are exhausted bounds.
  int status() const;
};

/// Order/monoid laws, O0-O5 (basic w = w' = 0 instance and full form
/// separately), weak cancellation, almost unperforation, almost divisibility,
/// positive order. Exhaustive within the window where the configuration count
/// allows, deterministic seeded sampling beyond that.
AuditReport audit_axioms(const ModelPtr& m, const Window& w);

/// Additivity, zero/order preservation, M1 on sampled chains, M2 on sampled
/// way-below pairs.
AuditReport audit_morphism(const CuMap& f, const Window& w);

/// Fullness of x: sup of multiples reaches the maximum element. Unknown when
/// the model offers no closed-form multiple supremum or no maximum.
Verdict is_full(const CuModel& m, const Element& x);

/// Re-runs the violation claimed by a fail (or expected-fail) verdict.
/// Every reported failure must come back true here.
bool reevaluate(const ModelPtr& m, const PredicateResult& r);
bool reevaluate(const CuMap& f, const PredicateResult& r);

}  // namespace cusemi
