#pragma once

#include "cusemi/audit.hpp"
#include "cusemi/cumap.hpp"
#include "cusemi/model.hpp"
#include "cusemi/vector_model.hpp"

namespace cusemi {

/// Pair (x, e) standing for the difference x - e. The subtrahend e must be
/// compact in the base model; x is unrestricted.
struct FormalDifference {
  Element x;
  Element e;
};

/// Three-valued answer of the difference-order procedures.
///   True     carries witnesses that re-evaluate (an approximant and the
///            compact that separates it, a lifted representative, ...).
///   False    carries a certificate string and, when one exists, the
///            refuting configuration.
///   Unknown  names the bound that ran out.
struct Verdict3 {
  enum class Value { True, False, Unknown };
  Value value = Value::Unknown;
  std::string detail;
  std::vector<Element> witness;

  bool is_true() const { return value == Value::True; }
  bool is_false() const { return value == Value::False; }
  bool is_unknown() const { return value == Value::Unknown; }

  static Verdict3 yes(std::string d = {}, std::vector<Element> w = {}) {
    return {Value::True, std::move(d), std::move(w)};
  }
  static Verdict3 no(std::string d = {}, std::vector<Element> w = {}) {
    return {Value::False, std::move(d), std::move(w)};
  }
  static Verdict3 open(std::string d = {}) { return {Value::Unknown, std::move(d), {}}; }
};

std::string verdict3_name(Verdict3::Value v);

/// Three-valued conjunction: any false wins, otherwise any unknown, else true.
Verdict3 v3_and(const Verdict3& a, const Verdict3& b);

/// How the difference order is decided.
///   ClosedForm     difference vectors in signed extended arithmetic; only for
///                  free Nat vector bases, where it is exact.
///   BoundedSearch  the definitional check: approximants of x against compacts
///                  from {n*u} and the compact window. Exhaustion refutes only
///                  when the base declares the compact search complete.
///   StableRank     the shortcut leq(x+f+m*u, y+e+m*u); sound only under a
///                  stable-rank assumption recorded in the verdict detail.
enum class CcStrategy { ClosedForm, BoundedSearch, StableRank };

std::string cc_strategy_name(CcStrategy s);

/// Chain of formal differences: a finite prefix, optionally declared to keep
/// strictly increasing past it. Closed-form bases extrapolate the declared
/// tail (strictly moving coordinates ramp to infinity); the generic recursion
/// truncates at the prefix and reports unknown for declared tails.
struct CcChain {
  std::vector<FormalDifference> prefix;
  bool increasing_tail = false;
};

struct CcSupResult {
  Verdict3 verdict;
  FormalDifference sup;
  /// Positive representatives of the (translated) prefix classes.
  std::vector<Element> lifts;
  /// The interleaved increasing chain built from the lifts.
  std::vector<Element> zchain;
};

/// The formal-differences semigroup over a positively ordered base that
/// satisfies the almost-algebraic-order axiom. Construction runs that gate
/// audit and refuses bases that fail it. All procedures are pure; verdicts
/// carry enough data to re-run.
class CcModel {
 public:
  /// Builds the construction, auditing the gate (positive order, the basic and
  /// full almost-algebraic-order predicates) unless `gate` is false. Throws
  /// std::invalid_argument when the gate fails, when a requested strategy does
  /// not apply to the base, or when StableRank lacks an order unit.
  static CcModel make(ModelPtr base, const Window& w,
                      std::optional<CcStrategy> strategy = std::nullopt, long long stable_rank_m = 1,
                      bool gate = true);

  const ModelPtr& base() const { return base_; }
  const Window& window() const { return window_; }
  CcStrategy strategy() const { return strategy_; }
  long long stable_rank_m() const { return srm_; }
  /// Gate audit transcript; empty results when the gate was skipped.
  const AuditReport& gate_report() const { return gate_; }

  /// True when the base is a free Nat vector model and difference vectors are
  /// an exact normal form.
  bool closed_form() const { return view_ != nullptr; }
  /// Signed vector model of difference vectors; null outside the closed form.
  const VectorModelPtr& view() const { return view_; }

  /// Validates that e is compact and the signatures match.
  FormalDifference pair(Element x, Element e) const;
  FormalDifference pair_of(Element x) const;

  /// Difference vector x - e in signed extended arithmetic (closed form only).
  std::optional<ScalarVec> diff_vector(const FormalDifference& d) const;
  /// Element of view() holding the difference vector (closed form only).
  std::optional<Element> class_vector(const FormalDifference& d) const;
  /// Canonical representative (positive part, negative part) of the class;
  /// identity outside the closed form, where classes have no normal form.
  FormalDifference canonical_pair(const FormalDifference& d) const;

  Verdict3 below(const FormalDifference& a, const FormalDifference& b) const;
  Verdict3 eq(const FormalDifference& a, const FormalDifference& b) const;
  FormalDifference add(const FormalDifference& a, const FormalDifference& b) const;

  /// Compact containment of classes: reduction to the signed view in the
  /// closed form, the definitional check against the canonical approximants
  /// of the majorant otherwise.
  Verdict3 way_below(const FormalDifference& a, const FormalDifference& b) const;

  /// Supremum of a class chain. Closed form: pointwise supremum of difference
  /// vectors, cross-checked against the lifting recursion. Generic: translate
  /// by a compact until positive, lift every term, interleave lifts into an
  /// increasing representative chain; the prefix supremum is its last class.
  CcSupResult sup(const CcChain& c) const;

  /// Representative x' with class(x', 0) equal to the given positive class;
  /// witness[0] carries x'. Throws when the class is provably not positive.
  Verdict3 positive_lift(const FormalDifference& d) const;

  /// z with x' way below z and class(z, 0) = class(y, 0), given x' way below x
  /// and class(x,0) <= class(y,0); witness[0] carries z. x' = 0 reduces to
  /// positive_lift.
  Verdict3 chain_lift(const Element& xp, const Element& x, const Element& y) const;

  /// Shortcut order: leq(x + f + m*u, y + e + m*u). Valid verbatim only when
  /// the base has stable rank at most m; callers carry that assumption.
  bool srm_decide(long long m, const FormalDifference& a, const FormalDifference& b) const;

 private:
  CcModel(ModelPtr base, Window w, CcStrategy s, long long m, AuditReport gate,
          VectorModelPtr closed, VectorModelPtr view);

  /// The lifting recursion on the chain prefix; assumes monotonicity was
  /// already checked.
  CcSupResult sup_generic(const CcChain& c) const;

  ModelPtr base_;
  Window window_;
  CcStrategy strategy_;
  long long srm_;
  AuditReport gate_;
  VectorModelPtr closed_;  // base downcast when the closed form applies
  VectorModelPtr view_;    // signed difference-vector model, closed form only
};

/// The definitional relation (x,e) below (y,f) over an arbitrary base, without
/// the gate or a strategy choice: for every canonical approximant x' of x,
/// search a compact g with x'+f+g way below y+e+g. Used by the augmented
/// checks, whose carriers are not positively ordered.
Verdict3 cc_below_raw(const CuModel& base, const FormalDifference& a, const FormalDifference& b,
                      const Window& w);

struct CcMapResult {
  CuMap map;
  AuditReport audit;
};

/// Morphism induced on difference vectors by a base morphism: matrix and
/// pullback actions transfer to the signed views unchanged. Requires both
/// constructions in closed form and a base map that passes its own audit;
/// the returned audit must pass as well.
CcMapResult cc_map(const CcModel& src, const CcModel& tgt, const CuMap& base_map);

}  // namespace cusemi
